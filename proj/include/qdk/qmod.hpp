#ifndef QDK_QMOD_HPP
#define QDK_QMOD_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdk/hopf.hpp"
#include "qdk/hscript.hpp"
#include "qdk/linalg.hpp"
#include "qdk/qop.hpp"

namespace qdk {

using RMat = Matrix<RatFunc>;

inline RMat mat_zero(const FieldPtr& F, std::size_t r, std::size_t c) {
    return RMat(r, c, RatFunc(F));
}
inline RMat mat_identity(const FieldPtr& F, std::size_t n) {
    RMat m = mat_zero(F, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc::constant(F->one());
    return m;
}
inline bool mat_eq(const RMat& a, const RMat& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        if (a.data[i] != b.data[i]) return false;
    return true;
}
inline RMat mat_add(const RMat& a, const RMat& b) {
    RMat r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = r.data[i] + b.data[i];
    return r;
}
inline RMat mat_sub(const RMat& a, const RMat& b) {
    RMat r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = r.data[i] - b.data[i];
    return r;
}
inline RMat mat_scaled(const RMat& a, const RatFunc& x) {
    RMat r = a;
    for (auto& e : r.data) e = e * x;
    return r;
}
inline RMat mat_scaled(const RMat& a, const Scalar& c) {
    return mat_scaled(a, RatFunc::constant(c));
}
inline RMat mat_mul(const RMat& a, const RMat& b) {
    const FieldPtr& F = a.data.front().field();
    RMat r = mat_zero(F, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return r;
}
inline RMat mat_sigma(const RMat& a, long e) {
    RMat r = a;
    for (auto& x : r.data) x = x.sigma(e);
    return r;
}
/// Entrywise delta^(k) tables, one table per entry reused across k.
inline std::vector<RMat> mat_delta_table(const RMat& a, unsigned long k_max) {
    const FieldPtr& F = a.data.front().field();
    std::vector<RMat> out(k_max + 1, mat_zero(F, a.rows, a.cols));
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        auto d = delta_table(k_max, a.data[i]);
        for (unsigned long k = 0; k <= k_max; ++k) out[k].data[i] = std::move(d[k]);
    }
    return out;
}
inline RMat mat_kron(const RMat& a, const RMat& b) {
    const FieldPtr& F = a.data.front().field();
    RMat r = mat_zero(F, a.rows * b.rows, a.cols * b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows; ++k)
                for (std::size_t l = 0; l < b.cols; ++l)
                    r.at(i * b.rows + k, j * b.cols + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}
inline std::optional<RMat> mat_inverse(const RMat& a) {
    if (a.rows != a.cols) return std::nullopt;
    const FieldPtr& F = a.data.front().field();
    const std::size_t n = a.rows;
    RMat aug = mat_zero(F, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = RatFunc::constant(F->one());
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    RMat r = mat_zero(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

/// An iterative q-difference module of finite free rank over K, specified by
/// the matrices of sigma and d_1 on a fixed basis (columns are the images of
/// the basis vectors). All other action matrices are derived:
///   M(delta^(1)) = u (M(sigma) - I),
///   [k]_q M(delta^(k)) = delta^(1)(M^(k-1)) + M^(1) sigma_q(M^(k-1)), k < N,
///   c M(d_c) = sum_{a+e=N} M^(e) (sigma^e delta^(a))(M(d_{c-1})),
///   M(delta^(cN+b)) = sum_{a+e=b} M^(e) (sigma^e delta^(a))(M(d_c)).
class QDiffModule {
public:
    QDiffModule(FieldPtr f, RMat msigma, RMat md1)
        : field_(std::move(f)), rank_(msigma.rows), msigma_(std::move(msigma)),
          md1_(std::move(md1)) {
        if (msigma_.rows != msigma_.cols || md1_.rows != md1_.cols ||
            md1_.rows != rank_)
            throw std::invalid_argument("matrices must be square of equal size");
    }

    static QDiffModule unit(const FieldPtr& F) {
        return QDiffModule(F, mat_identity(F, 1), mat_zero(F, 1, 1));
    }
    /// The rank-1 module realized by t itself: sigma acts by q, d_1 by 0.
    static QDiffModule v_t(const FieldPtr& F) {
        RMat s = mat_zero(F, 1, 1);
        s.at(0, 0) = RatFunc::constant(F->q());
        return QDiffModule(F, s, mat_zero(F, 1, 1));
    }

    const FieldPtr& field() const { return field_; }
    std::size_t rank() const { return rank_; }
    const RMat& msigma() const { return msigma_; }
    const RMat& md1() const { return md1_; }

    /// M(sigma^a), a mod N.
    const RMat& msigma_pow(unsigned long a) const {
        const unsigned long N = field_->order();
        a %= N;
        if (spow_.empty()) spow_.push_back(mat_identity(field_, rank_));
        while (spow_.size() <= a)
            spow_.push_back(mat_mul(msigma_, mat_sigma(spow_.back(), 1)));
        return spow_[a];
    }

    /// Derived matrix of the image of delta^(k).
    const RMat& mdelta(unsigned long k) const {
        const unsigned long N = field_->order();
        if (dcache_.empty()) dcache_.push_back(mat_identity(field_, rank_));
        while (dcache_.size() <= k) {
            unsigned long m = dcache_.size();
            if (m == 1) {
                dcache_.push_back(mat_scaled(mat_sub(msigma_, mat_identity(field_, rank_)),
                                             RatFunc::u(field_)));
            } else if (m < N) {
                // [m]_q M^(m) = delta^(1)(M^(m-1)) + M^(1) sigma_q(M^(m-1))
                auto t = mat_delta_table(dcache_[m - 1], 1);
                RMat v = mat_add(t[1], mat_mul(dcache_[1], mat_sigma(t[0], 1)));
                dcache_.push_back(mat_scaled(v, q_int(field_, m).inv()));
            } else if (m == N) {
                dcache_.push_back(md1_);
            } else {
                unsigned long c = m / N, b = m % N;
                const RMat& base = b == 0 ? mdelta((c - 1) * N) : mdelta(c * N);
                unsigned long top = b == 0 ? N : b;
                auto t = mat_delta_table(base, top);
                RMat v = mat_zero(field_, rank_, rank_);
                for (unsigned long a = 0; a <= top; ++a) {
                    unsigned long e = top - a;
                    v = mat_add(v, mat_mul(mdelta(e), mat_sigma(t[a], static_cast<long>(e))));
                }
                if (b == 0) {
                    Scalar cc = field_->from_int(static_cast<long>(c));
                    if (cc.is_zero())
                        throw std::logic_error(
                            "derived d-matrices need c invertible in the base field");
                    v = mat_scaled(v, cc.inv());
                }
                dcache_.push_back(std::move(v));
            }
        }
        return dcache_[k];
    }

    /// Matrix of an element of H, via M(sigma^a delta^(i)) =
    /// M(sigma^a) sigma_q^a(M(delta^(i))).
    RMat m_of(const HElem& h) const {
        RMat r = mat_zero(field_, rank_, rank_);
        for (const auto& [k, c] : h.terms()) {
            RMat v = mat_mul(msigma_pow(k.first),
                             mat_sigma(mdelta(k.second), static_cast<long>(k.first % field_->order())));
            r = mat_add(r, mat_scaled(v, c));
        }
        return r;
    }

private:
    FieldPtr field_;
    std::size_t rank_;
    RMat msigma_, md1_;
    mutable std::vector<RMat> spow_, dcache_;
};

/// (1/[b]_q!)(u(sigma - 1))^b as sum_s x_s sigma^s, s mod N. This rewrites
/// delta^(cN+b) = (1/[b]_q!)(u(sigma-1))^b delta^(cN) into the normal form
/// below; needs b < N so [b]_q! is invertible.
inline std::map<unsigned long, RatFunc> delta_sigma_expansion(const FieldPtr& F,
                                                              unsigned long b) {
    const unsigned long N = F->order();
    const RatFunc u = RatFunc::u(F);
    std::map<unsigned long, RatFunc> v{{0, RatFunc::constant(F->one())}};
    for (unsigned long i = 1; i <= b; ++i) {
        std::map<unsigned long, RatFunc> w;
        for (const auto& [s, x] : v) {
            RatFunc hi = u * x.sigma(1);
            auto it = w.find((s + 1) % N);
            if (it == w.end()) w.emplace((s + 1) % N, hi);
            else it->second = it->second + hi;
            it = w.find(s);
            if (it == w.end()) w.emplace(s, RatFunc(F) - u * x);
            else it->second = it->second - u * x;
        }
        v = std::move(w);
    }
    RatFunc scale = RatFunc::constant(q_factorial(F, b).inv());
    for (auto& [s, x] : v) x = x * scale;
    return v;
}

/// A semilinear operator on K^n in normal form: a finite sum of terms
/// M_{r,c} (sigma_q^r delta^(cN) entrywise), r mod N. Arbitrary terms
/// M sigma^r delta^(a) are rewritten into this shape on insertion; the
/// normal-form basis operators are linearly independent over K, so equality
/// of coefficient tables is equality of operators.
struct SemiOp {
    using Key = std::pair<unsigned long, unsigned long>;  // (r mod N, c)
    FieldPtr field;
    std::size_t rank = 0;
    std::map<Key, RMat> t;

    SemiOp(FieldPtr f, std::size_t n) : field(std::move(f)), rank(n) {}

    void add(unsigned long r, unsigned long a, const RMat& m) {
        const unsigned long N = field->order();
        r %= N;
        if (a % N == 0) {
            add_normal({r, a / N}, m);
            return;
        }
        for (const auto& [s, x] : delta_sigma_expansion(field, a % N))
            add_normal({(r + s) % N, a / N},
                       mat_scaled(m, x.sigma(static_cast<long>(r))));
    }

    void add_normal(const Key& key, const RMat& m) {
        bool zero = true;
        for (const auto& e : m.data)
            if (!e.is_zero()) {
                zero = false;
                break;
            }
        if (zero) return;
        auto it = t.find(key);
        if (it == t.end()) {
            t.emplace(key, m);
        } else {
            it->second = mat_add(it->second, m);
            for (const auto& e : it->second.data)
                if (!e.is_zero()) return;
            t.erase(it);
        }
    }

    bool operator==(const SemiOp& o) const {
        if (t.size() != o.t.size()) return false;
        auto it = t.begin(), jt = o.t.begin();
        for (; it != t.end(); ++it, ++jt)
            if (it->first != jt->first || !mat_eq(it->second, jt->second)) return false;
        return true;
    }
    bool operator!=(const SemiOp& o) const { return !(*this == o); }

    SemiOp scaled(const Scalar& c) const {
        SemiOp r(field, rank);
        for (const auto& [k, m] : t) r.add_normal(k, mat_scaled(m, c));
        return r;
    }

    static SemiOp identity(const FieldPtr& F, std::size_t n) {
        SemiOp r(F, n);
        r.add(0, 0, mat_identity(F, n));
        return r;
    }
    static SemiOp sigma(const QDiffModule& V) {
        SemiOp r(V.field(), V.rank());
        r.add(1, 0, V.msigma());
        return r;
    }
    /// delta_V^(k) = sum_{a+b=k} M^(b) sigma^b delta^(a).
    static SemiOp delta(const QDiffModule& V, unsigned long k) {
        SemiOp r(V.field(), V.rank());
        for (unsigned long a = 0; a <= k; ++a) r.add(k - a, a, V.mdelta(k - a));
        return r;
    }
};

/// Composition of semilinear operators: the d-part of the left factor passes
/// through the right coefficient by the twisted Leibniz rule
///   delta^(k)(fg) = sum_{u+v=k} delta^(u)(f) sigma^u(delta^(v)(g)),
/// then delta^(v) sigma^r = q^{vr} sigma^r delta^(v) and
/// delta^(v) delta^(a) = C(v+a,v)_q delta^(v+a).
inline SemiOp compose(const SemiOp& A, const SemiOp& B) {
    const FieldPtr& F = A.field;
    const unsigned long N = F->order();
    SemiOp out(F, A.rank);
    unsigned long amax = 0;
    for (const auto& [k, m] : A.t) amax = std::max(amax, k.second * N);
    for (const auto& [kb, Mb] : B.t) {
        auto dtab = mat_delta_table(Mb, amax);
        for (const auto& [ka, Ma] : A.t) {
            const unsigned long a = ka.second * N, ap = kb.second * N;
            for (unsigned long u = 0; u <= a; ++u) {
                unsigned long v = a - u;
                Scalar c = F->q_pow(static_cast<long>((v % N) * kb.first)) *
                           q_binom(F, v + ap, v);
                if (c.is_zero()) continue;
                RMat m = mat_mul(Ma, mat_sigma(dtab[u], static_cast<long>(ka.first)));
                out.add(ka.first + u + kb.first, v + ap, mat_scaled(m, c));
            }
        }
    }
    return out;
}

/// Checks the defining relations as identities of semilinear operators on
/// K^n; equality of coefficient tables is the full operator identity, so no
/// evaluation points are needed.
inline Report module_validate(const QDiffModule& V, unsigned long k_bound) {
    const FieldPtr& F = V.field();
    const unsigned long N = F->order();
    Report rep;
    rep.suite = "module/validate";
    rep.seed = kDefaultSeed;

    rep.add("M(sigma) invertible", mat_inverse(V.msigma()).has_value(), "");
    rep.add("twisted norm: M(sigma^N) = I",
            mat_eq(V.msigma_pow(N), mat_identity(F, V.rank())), "");
    {
        RMat want = mat_scaled(mat_sub(V.msigma(), mat_identity(F, V.rank())),
                               RatFunc::u(F));
        rep.add("forced relation: M(delta^(1)) = u(M(sigma) - I)",
                mat_eq(V.mdelta(1), want), "");
    }
    {
        SemiOp sg = SemiOp::sigma(V);
        SemiOp p = SemiOp::identity(F, V.rank());
        for (unsigned long i = 0; i < N; ++i) p = compose(sg, p);
        rep.add("operator identity: sigma_V^N = id", p == SemiOp::identity(F, V.rank()),
                "");
        bool ok = true;
        std::string wit;
        for (unsigned long k = 1; k <= std::min(k_bound, N) && ok; ++k) {
            SemiOp dk = SemiOp::delta(V, k);
            if (compose(dk, sg) != compose(sg, dk).scaled(F->q_pow(static_cast<long>(k)))) {
                ok = false;
                wit = "k=" + std::to_string(k);
            }
        }
        rep.add("operator identity: delta_V^(k) sigma_V = q^k sigma_V delta_V^(k)", ok,
                wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (unsigned long i = 1; i <= k_bound && ok; ++i)
            for (unsigned long j = 1; i + j <= k_bound && ok; ++j) {
                SemiOp lhs = compose(SemiOp::delta(V, i), SemiOp::delta(V, j));
                SemiOp rhs = SemiOp::delta(V, i + j).scaled(q_binom(F, i + j, i));
                if (lhs != rhs) {
                    ok = false;
                    wit = "i=" + std::to_string(i) + ", j=" + std::to_string(j);
                }
            }
        rep.add("operator identity: delta_V^(i) delta_V^(j) = C(i+j,i)_q delta_V^(i+j)",
                ok, wit);
    }
    rep.sort();
    return rep;
}

inline QDiffModule module_tensor(const QDiffModule& V, const QDiffModule& W) {
    const FieldPtr& F = V.field();
    const unsigned long N = F->order();
    RMat ms = mat_kron(V.msigma(), W.msigma());
    RMat md = mat_zero(F, V.rank() * W.rank(), V.rank() * W.rank());
    // Delta(delta^(N)) = sum_{i+j=N} sigma^j delta^(i) (x) delta^(j)
    for (unsigned long i = 0; i <= N; ++i) {
        unsigned long j = N - i;
        RMat left = mat_mul(V.msigma_pow(j), mat_sigma(V.mdelta(i), static_cast<long>(j % N)));
        md = mat_add(md, mat_kron(left, W.mdelta(j)));
    }
    return QDiffModule(F, std::move(ms), std::move(md));
}

/// Dual action through the antipode: (h -> f)(v) = sum h_1 -> f(S(h_2) -> v),
/// so M*(h)_{kj} = sum alpha(h_1)(M(S(h_2))_{jk}).
inline RMat module_dual_matrix(const QDiffModule& V, const HElem& h) {
    const FieldPtr& F = V.field();
    const std::size_t n = V.rank();
    RMat out = mat_zero(F, n, n);
    const HTensor cop = h_coproduct(h);
    for (const auto& [k, c] : cop.terms()) {
        HElem s2 = h_antipode(
            HElem::basis(F, static_cast<long>(k.second.first), k.second.second, F->one()));
        RMat ms = V.m_of(s2);
        // alpha(sigma^a delta^(i)) = sigma_q^a after delta^(i), entrywise
        auto dt = mat_delta_table(ms, k.first.second);
        RMat acted = mat_sigma(dt[k.first.second], static_cast<long>(k.first.first));
        for (std::size_t kk = 0; kk < n; ++kk)
            for (std::size_t j = 0; j < n; ++j)
                out.at(kk, j) = out.at(kk, j) + acted.at(j, kk) * RatFunc::constant(c);
    }
    return out;
}

inline QDiffModule module_dual(const QDiffModule& V) {
    if (!mat_inverse(V.msigma())) throw std::invalid_argument("not dualizable input");
    const FieldPtr& F = V.field();
    RMat ms = module_dual_matrix(V, HElem::sigma(F));
    RMat md = module_dual_matrix(V, HElem::d(F, 1));
    return QDiffModule(F, std::move(ms), std::move(md));
}

/// Basis change by an invertible gauge P (new coordinates x' = P x):
///   M'(sigma) = P M(sigma) sigma_q(P^{-1}),
///   M'(d_1) = P sum_{a+b=N} M(delta^(b)) sigma^b(delta^(a)(P^{-1})).
inline QDiffModule gauge_twist(const QDiffModule& V, const RMat& P) {
    auto pinv = mat_inverse(P);
    if (!pinv) throw std::invalid_argument("gauge matrix not invertible");
    const FieldPtr& F = V.field();
    const unsigned long N = F->order();
    RMat ms = mat_mul(mat_mul(P, V.msigma()), mat_sigma(*pinv, 1));
    auto dt = mat_delta_table(*pinv, N);
    RMat md = mat_zero(F, V.rank(), V.rank());
    for (unsigned long a = 0; a <= N; ++a) {
        unsigned long b = N - a;
        md = mat_add(md, mat_mul(V.mdelta(b), mat_sigma(dt[a], static_cast<long>(b % N))));
    }
    md = mat_mul(P, md);
    return QDiffModule(F, std::move(ms), std::move(md));
}

/// Solutions with entries p_i / denom, deg p_i <= deg_bound, of
/// sigma_q(x) = M(sigma) x and delta^(N)(x) = M(d_1) x. Both operators are
/// k-linear, so the solutions form a k-vector space; one exact nullspace
/// computation over k finds a basis.
struct SolutionSpace {
    FieldPtr field;
    std::vector<std::vector<RatFunc>> basis;  // column vectors
};

inline SolutionSpace module_solve(const QDiffModule& V, long deg_bound, const Poly& denom) {
    const FieldPtr& F = V.field();
    const unsigned long N = F->order();
    const std::size_t n = V.rank();
    if (denom.is_zero()) throw std::invalid_argument("denominator must be nonzero");
    const RatFunc den(denom);
    const std::size_t nunk = n * static_cast<std::size_t>(deg_bound + 1);
    // residual vectors per unknown basis function t^m / denom in slot i
    std::vector<std::vector<RatFunc>> resid(nunk);
    std::size_t u = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (long m = 0; m <= deg_bound; ++m, ++u) {
            RatFunc b = RatFunc(Poly::monomial(F, static_cast<std::size_t>(m), F->one())) /
                        den;
            std::vector<RatFunc> r(2 * n, RatFunc(F));
            RatFunc dNb = delta_ratfunc(N, b);
            for (std::size_t row = 0; row < n; ++row) {
                r[row] = (row == i ? b.sigma(1) : RatFunc(F)) - V.msigma().at(row, i) * b;
                r[n + row] = (row == i ? dNb : RatFunc(F)) - V.md1().at(row, i) * b;
            }
            resid[u] = std::move(r);
        }
    // assemble polynomial identities row by row over a common denominator
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t eq = 0; eq < 2 * n; ++eq) {
        Poly D = Poly::constant(F->one());
        for (std::size_t uu = 0; uu < nunk; ++uu) {
            const Poly& d = resid[uu][eq].den();
            Poly g = gcd(D, d);
            D = D * d.divmod(g).first;
        }
        long degmax = -1;
        std::vector<Poly> nums(nunk);
        for (std::size_t uu = 0; uu < nunk; ++uu) {
            nums[uu] = resid[uu][eq].num() * D.divmod(resid[uu][eq].den()).first;
            degmax = std::max(degmax, nums[uu].degree());
        }
        for (long e = 0; e <= degmax; ++e) {
            std::vector<Scalar> row(nunk, F->zero());
            bool nonzero = false;
            for (std::size_t uu = 0; uu < nunk; ++uu) {
                row[uu] = nums[uu].coeff(static_cast<std::size_t>(e));
                nonzero = nonzero || !row[uu].is_zero();
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    std::vector<std::vector<Scalar>> null;
    if (rows.empty()) {
        for (std::size_t j = 0; j < nunk; ++j) {
            std::vector<Scalar> v(nunk, F->zero());
            v[j] = F->one();
            null.push_back(std::move(v));
        }
    } else {
        Matrix<Scalar> m(rows.size(), nunk, F->zero());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < nunk; ++j) m.at(i, j) = rows[i][j];
        null = nullspace(m, F->zero(), F->one());
    }
    SolutionSpace s{F, {}};
    for (const auto& v : null) {
        std::vector<RatFunc> col(n, RatFunc(F));
        std::size_t uu = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Poly p(F);
            for (long mdeg = 0; mdeg <= deg_bound; ++mdeg, ++uu)
                if (!v[uu].is_zero())
                    p = p + Poly::monomial(F, static_cast<std::size_t>(mdeg), v[uu]);
            col[i] = RatFunc(p) / den;
        }
        s.basis.push_back(std::move(col));
    }
    if (s.basis.size() > n)
        throw std::logic_error("solution dimension exceeds the rank bound");
    return s;
}

/// Checks that X is a fundamental solution matrix: invertible over K with
/// every column a solution.
inline Report verify_fundamental_matrix(const QDiffModule& V, const RMat& X) {
    const FieldPtr& F = V.field();
    const unsigned long N = F->order();
    Report rep;
    rep.suite = "module/fundamental";
    rep.seed = kDefaultSeed;
    rep.add("X invertible over K", mat_inverse(X).has_value(), "");
    for (std::size_t j = 0; j < X.cols; ++j) {
        bool ok1 = true, ok2 = true;
        for (std::size_t i = 0; i < X.rows; ++i) {
            RatFunc s(F), d(F);
            for (std::size_t k = 0; k < X.rows; ++k) {
                s = s + V.msigma().at(i, k) * X.at(k, j);
                d = d + V.md1().at(i, k) * X.at(k, j);
            }
            ok1 = ok1 && X.at(i, j).sigma(1) == s;
            ok2 = ok2 && delta_ratfunc(N, X.at(i, j)) == d;
        }
        rep.add("column " + std::to_string(j) + " solves the sigma equation", ok1, "");
        rep.add("column " + std::to_string(j) + " solves the d_1 equation", ok2, "");
    }
    rep.sort();
    return rep;
}

}  // namespace qdk

#endif  // QDK_QMOD_HPP
