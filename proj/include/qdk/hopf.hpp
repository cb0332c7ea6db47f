#ifndef QDK_HOPF_HPP
#define QDK_HOPF_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "qdk/qcomb.hpp"
#include "qdk/report.hpp"

namespace qdk {

/// Basis index sigma^a delta^(i) of H: a mod N, i in N.
using HKey = std::pair<unsigned long, unsigned long>;

/// Element of the pointed Hopf algebra H over k, as a finitely supported
/// map (a, i) -> Scalar on the basis sigma^a delta^(i). Zero coefficients
/// are never stored.
class HElem {
public:
    HElem() = default;
    explicit HElem(FieldPtr f) : field_(std::move(f)) {}

    static HElem zero(const FieldPtr& f) { return HElem(f); }
    static HElem one(const FieldPtr& f) { return basis(f, 0, 0, f->one()); }
    static HElem sigma(const FieldPtr& f, long a = 1) { return basis(f, a, 0, f->one()); }
    static HElem delta(const FieldPtr& f, unsigned long i) { return basis(f, 0, i, f->one()); }
    static HElem d(const FieldPtr& f, unsigned long n) { return delta(f, n * f->order()); }
    static HElem basis(const FieldPtr& f, long a, unsigned long i, const Scalar& c) {
        HElem e(f);
        e.addTerm(a, i, c);
        return e;
    }

    const FieldPtr& field() const { return field_; }
    const std::map<HKey, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void addTerm(long a, unsigned long i, const Scalar& c) {
        if (c.is_zero()) return;
        unsigned long am = norm_exp(a);
        auto it = t_.find({am, i});
        if (it == t_.end()) {
            t_.insert({{am, i}, c});
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    bool operator==(const HElem& o) const { return t_ == o.t_; }
    bool operator!=(const HElem& o) const { return !(*this == o); }

    HElem operator+(const HElem& o) const {
        HElem r = *this;
        for (const auto& [k, c] : o.t_) r.addTerm(static_cast<long>(k.first), k.second, c);
        return r;
    }
    HElem operator-() const {
        HElem r(field_);
        for (const auto& [k, c] : t_) r.t_.insert({k, -c});
        return r;
    }
    HElem operator-(const HElem& o) const { return *this + (-o); }
    HElem operator*(const Scalar& s) const {
        HElem r(field_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : t_) {
            Scalar v = c * s;
            if (!v.is_zero()) r.t_.insert({k, v});
        }
        return r;
    }

    /// Product: bilinear extension of the rewrite rules
    ///   delta^(i) sigma = q^i sigma delta^(i),
    ///   delta^(i) delta^(j) = C(i+j,i)_q delta^(i+j).
    HElem operator*(const HElem& o) const {
        HElem r(field_);
        const FieldPtr& F = field_;
        for (const auto& [k1, c1] : t_)
            for (const auto& [k2, c2] : o.t_) {
                // (s^a d^(i)) (s^b d^(j)) = q^(i b) C(i+j,i)_q s^(a+b) d^(i+j)
                Scalar coef = c1 * c2 *
                              F->q_pow(static_cast<long>(k1.second) * static_cast<long>(k2.first)) *
                              F->q_binom(k1.second + k2.second, k1.second);
                r.addTerm(static_cast<long>(k1.first + k2.first), k1.second + k2.second, coef);
            }
        return r;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : t_) {
            if (!first) os << " + ";
            first = false;
            std::string cs = c.str();
            if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
            os << cs;
            if (k.first > 0) os << "*s" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
            os << "*d(" << k.second << ")";
        }
        return os.str();
    }

private:
    unsigned long norm_exp(long a) const {
        long n = static_cast<long>(field_->order());
        long r = a % n;
        if (r < 0) r += n;
        return static_cast<unsigned long>(r);
    }
    FieldPtr field_;
    std::map<HKey, Scalar> t_;
    friend class HTensor;
};

/// Element of H (x) H in the product basis; plain k-coalgebra tensor.
class HTensor {
public:
    explicit HTensor(FieldPtr f) : field_(std::move(f)) {}

    const std::map<std::pair<HKey, HKey>, Scalar>& terms() const { return t_; }

    void addTerm(const HKey& u, const HKey& v, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = t_.find({u, v});
        if (it == t_.end()) {
            t_.insert({{u, v}, c});
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    bool operator==(const HTensor& o) const { return t_ == o.t_; }
    bool operator!=(const HTensor& o) const { return !(*this == o); }

    HTensor operator*(const HTensor& o) const {
        HTensor r(field_);
        for (const auto& [k1, c1] : t_)
            for (const auto& [k2, c2] : o.t_) {
                HElem left = HElem::basis(field_, static_cast<long>(k1.first.first),
                                          k1.first.second, field_->one()) *
                             HElem::basis(field_, static_cast<long>(k2.first.first),
                                          k2.first.second, field_->one());
                HElem right = HElem::basis(field_, static_cast<long>(k1.second.first),
                                           k1.second.second, field_->one()) *
                              HElem::basis(field_, static_cast<long>(k2.second.first),
                                           k2.second.second, field_->one());
                for (const auto& [ku, cu] : left.terms())
                    for (const auto& [kv, cv] : right.terms())
                        addTermInto(r, ku, kv, c1 * c2 * cu * cv);
            }
        return r;
    }

    HTensor twist() const {
        HTensor r(field_);
        for (const auto& [k, c] : t_) r.addTerm(k.second, k.first, c);
        return r;
    }

private:
    static void addTermInto(HTensor& r, const HKey& u, const HKey& v, const Scalar& c) {
        r.addTerm(u, v, c);
    }
    FieldPtr field_;
    std::map<std::pair<HKey, HKey>, Scalar> t_;
};

/// Delta(sigma^a delta^(k)) = sum_{i+j=k} sigma^(a+j) delta^(i) (x) sigma^a delta^(j).
inline HTensor h_coproduct(const HElem& x) {
    const FieldPtr& F = x.field();
    const unsigned long N = F->order();
    HTensor r(F);
    for (const auto& [k, c] : x.terms()) {
        for (unsigned long j = 0; j <= k.second; ++j) {
            unsigned long i = k.second - j;
            r.addTerm({(k.first + j) % N, i}, {k.first, j}, c);
        }
    }
    return r;
}

inline Scalar h_counit(const HElem& x) {
    Scalar r = x.field()->zero();
    for (const auto& [k, c] : x.terms())
        if (k.second == 0) r = r + c;
    return r;
}

/// Antipode by the triangular recursion sum S(h_1) h_2 = eps(h) 1 on the
/// graded basis; no closed form is used.
class HAntipode {
public:
    explicit HAntipode(FieldPtr f) : field_(std::move(f)) {}

    HElem operator()(const HElem& x) {
        HElem r(field_);
        for (const auto& [k, c] : x.terms()) r = r + basis(k.first, k.second) * c;
        return r;
    }

private:
    HElem basis(unsigned long a, unsigned long k) {
        auto it = memo_.find({a, k});
        if (it != memo_.end()) return it->second;
        const unsigned long N = field_->order();
        HElem v(field_);
        if (k == 0) {
            v = HElem::sigma(field_, static_cast<long>((N - a) % N));
        } else {
            // S(s^a d^(k)) s^a = -sum_{j>0} S(s^(a+j) d^(k-j)) s^a d^(j)
            HElem acc(field_);
            for (unsigned long j = 1; j <= k; ++j) {
                HElem sj = basis((a + j) % N, k - j);
                acc = acc + sj * HElem::basis(field_, static_cast<long>(a), j, field_->one());
            }
            v = (-acc) * HElem::sigma(field_, static_cast<long>((N - a) % N));
        }
        memo_.insert({{a, k}, v});
        return v;
    }

    FieldPtr field_;
    std::map<HKey, HElem> memo_;
};

inline HElem h_antipode(const HElem& x) {
    HAntipode s(x.field());
    return s(x);
}

namespace detail_hopf {

// Triple tensor for the coassociativity check; all coefficients scalar.
using HKey3 = std::tuple<HKey, HKey, HKey>;

inline std::map<HKey3, Scalar> coassoc_left(const HElem& x) {
    // (Delta (x) id) Delta
    std::map<HKey3, Scalar> out;
    HTensor d = h_coproduct(x);
    for (const auto& [k, c] : d.terms()) {
        HElem leg(x.field());
        leg.addTerm(static_cast<long>(k.first.first), k.first.second, c);
        HTensor dd = h_coproduct(leg);
        for (const auto& [kk, cc] : dd.terms()) {
            HKey3 key{kk.first, kk.second, k.second};
            auto it = out.find(key);
            Scalar v = (it == out.end() ? cc : it->second + cc);
            if (v.is_zero()) {
                if (it != out.end()) out.erase(it);
            } else {
                out[key] = v;
            }
        }
    }
    return out;
}

inline std::map<HKey3, Scalar> coassoc_right(const HElem& x) {
    // (id (x) Delta) Delta
    std::map<HKey3, Scalar> out;
    HTensor d = h_coproduct(x);
    for (const auto& [k, c] : d.terms()) {
        HElem leg(x.field());
        leg.addTerm(static_cast<long>(k.second.first), k.second.second, c);
        HTensor dd = h_coproduct(leg);
        for (const auto& [kk, cc] : dd.terms()) {
            HKey3 key{k.first, kk.first, kk.second};
            auto it = out.find(key);
            Scalar v = (it == out.end() ? cc : it->second + cc);
            if (v.is_zero()) {
                if (it != out.end()) out.erase(it);
            } else {
                out[key] = v;
            }
        }
    }
    return out;
}

}  // namespace detail_hopf

/// Counit identities: (eps (x) id) Delta = id = (id (x) eps) Delta.
inline bool h_counit_axiom(const HElem& x) {
    HElem left(x.field()), right(x.field());
    HTensor d = h_coproduct(x);
    for (const auto& [k, c] : d.terms()) {
        if (k.first.second == 0) left.addTerm(static_cast<long>(k.second.first), k.second.second, c);
        if (k.second.second == 0) right.addTerm(static_cast<long>(k.first.first), k.first.second, c);
    }
    return left == x && right == x;
}

/// Both antipode identities: sum S(h_1) h_2 = eps(h) 1 = sum h_1 S(h_2).
inline bool h_antipode_axiom(const HElem& x, HAntipode& S) {
    const FieldPtr& F = x.field();
    HElem lhs(F), rhs(F);
    HTensor d = h_coproduct(x);
    for (const auto& [k, c] : d.terms()) {
        HElem h1 = HElem::basis(F, static_cast<long>(k.first.first), k.first.second, c);
        HElem h2 = HElem::basis(F, static_cast<long>(k.second.first), k.second.second, F->one());
        lhs = lhs + S(h1) * h2;
        rhs = rhs + h1 * S(h2);
    }
    HElem target = HElem::one(F) * h_counit(x);
    return lhs == target && rhs == target;
}

/// Axiom suite for H on all basis elements sigma^a delta^(i), i <= i_bound.
inline Report verify_hopf_axioms(const FieldPtr& F, unsigned long i_bound) {
    Report rep;
    rep.suite = "hopf";
    const unsigned long N = F->order();
    HAntipode S(F);

    bool coassoc = true, counit = true, antipode = true;
    std::string wit_coassoc, wit_counit, wit_antipode;
    for (unsigned long a = 0; a < N; ++a)
        for (unsigned long i = 0; i <= i_bound; ++i) {
            HElem x = HElem::basis(F, static_cast<long>(a), i, F->one());
            if (coassoc && detail_hopf::coassoc_left(x) != detail_hopf::coassoc_right(x)) {
                coassoc = false;
                wit_coassoc = x.str();
            }
            if (counit && !h_counit_axiom(x)) {
                counit = false;
                wit_counit = x.str();
            }
            if (antipode && !h_antipode_axiom(x, S)) {
                antipode = false;
                wit_antipode = x.str();
            }
        }
    rep.add("coassociativity", coassoc, wit_coassoc);
    rep.add("counit axiom", counit, wit_counit);
    rep.add("antipode identities", antipode, wit_antipode);

    // Delta is an algebra map: Delta(xy) = Delta(x) Delta(y) on basis pairs.
    {
        bool ok = true;
        std::string wit;
        for (unsigned long a = 0; a < N && ok; ++a)
            for (unsigned long i = 0; i <= i_bound && ok; ++i)
                for (unsigned long b = 0; b < N && ok; ++b)
                    for (unsigned long j = 0; j <= i_bound && ok; ++j) {
                        HElem x = HElem::basis(F, static_cast<long>(a), i, F->one());
                        HElem y = HElem::basis(F, static_cast<long>(b), j, F->one());
                        if (h_coproduct(x * y) != h_coproduct(x) * h_coproduct(y)) {
                            ok = false;
                            wit = x.str() + " , " + y.str();
                        }
                    }
        rep.add("coproduct is an algebra map", ok, wit);
    }

    // Non-cocommutativity witness at delta^(1).
    {
        HTensor d = h_coproduct(HElem::delta(F, 1));
        rep.add("non-cocommutativity witness d(1)", d != d.twist(), "Delta(d(1)) is symmetric");
    }

    // J-closure: products of sigma^a delta^(i), i < N, stay in span{i < N}.
    {
        bool ok = true;
        std::string wit;
        for (unsigned long i = 0; i < N && ok; ++i)
            for (unsigned long j = 0; j < N && ok; ++j) {
                HElem p = HElem::delta(F, i) * HElem::delta(F, j) * HElem::sigma(F, 1);
                for (const auto& [k, c] : p.terms())
                    if (k.second >= N) {
                        ok = false;
                        wit = "d(" + std::to_string(i) + ") d(" + std::to_string(j) + ")";
                    }
            }
        rep.add("J is closed under multiplication", ok, wit);
    }

    // Grading: basis products concentrate in a single delta-degree i + j.
    {
        bool ok = true;
        std::string wit;
        for (unsigned long i = 0; i <= i_bound && ok; ++i)
            for (unsigned long j = 0; j <= i_bound && ok; ++j) {
                HElem p = HElem::basis(F, 1, i, F->one()) * HElem::basis(F, 0, j, F->one());
                for (const auto& [k, c] : p.terms())
                    if (k.second != i + j) {
                        ok = false;
                        wit = "i=" + std::to_string(i) + ", j=" + std::to_string(j);
                    }
            }
        rep.add("coradical grading of products", ok, wit);
    }

    rep.sort();
    return rep;
}

}  // namespace qdk

#endif  // QDK_HOPF_HPP
