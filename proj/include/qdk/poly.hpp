#ifndef QDK_POLY_HPP
#define QDK_POLY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qdk/field.hpp"

namespace qdk {

/// Dense polynomial in t over the coefficient field k, index = degree.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr f) : field_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<Scalar> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
        trim();
    }

    static Poly constant(const Scalar& s) {
        Poly p(s.field());
        if (!s.is_zero()) p.c_.push_back(s);
        return p;
    }
    static Poly t(const FieldPtr& f) { return monomial(f, 1, f->one()); }
    static Poly monomial(const FieldPtr& f, std::size_t deg, const Scalar& c) {
        Poly p(f);
        if (!c.is_zero()) {
            p.c_.assign(deg + 1, f->zero());
            p.c_.back() = c;
        }
        return p;
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for 0
    Scalar coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : field_->zero();
    }
    Scalar lead() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero");
        return c_.back();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        std::vector<Scalar> v(std::max(c_.size(), o.c_.size()), field_->zero());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = v[i] + c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] + o.c_[i];
        return Poly(field_, std::move(v));
    }
    Poly operator-() const {
        std::vector<Scalar> v = c_;
        for (auto& s : v) s = -s;
        return Poly(field_, std::move(v));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly(field_);
        // Accumulate raw q-coordinates and reduce once per output coefficient;
        // going through Scalar arithmetic per term costs an allocation and a
        // modular reduction each.
        const std::size_t d = field_->degree();
        const std::size_t w = d > 0 ? 2 * d - 1 : 1;
        const std::size_t n = c_.size() + o.c_.size() - 1;
        std::vector<std::vector<mpq_class>> acc(n, std::vector<mpq_class>(w, mpq_class(0)));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const auto& a = c_[i].coeffs();
            if (a.empty()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                const auto& b = o.c_[j].coeffs();
                auto& out = acc[i + j];
                for (std::size_t ia = 0; ia < a.size(); ++ia)
                    for (std::size_t ib = 0; ib < b.size(); ++ib)
                        out[ia + ib] += a[ia] * b[ib];
            }
        }
        std::vector<Scalar> v;
        v.reserve(n);
        for (auto& coords : acc) v.push_back(field_->from_coords(std::move(coords)));
        return Poly(field_, std::move(v));
    }
    Poly operator*(const Scalar& s) const {
        std::vector<Scalar> v = c_;
        for (auto& a : v) a = a * s;
        return Poly(field_, std::move(v));
    }

    /// Euclidean division; returns (quotient, remainder).
    std::pair<Poly, Poly> divmod(const Poly& b) const {
        if (b.is_zero()) throw std::domain_error("division by zero");
        if (degree() < b.degree()) return {Poly(field_), *this};
        std::vector<Scalar> rem = c_;
        std::vector<Scalar> quot(c_.size() - b.c_.size() + 1, field_->zero());
        Scalar li = b.lead().inv();
        for (std::size_t i = quot.size(); i-- > 0;) {
            Scalar cq = rem[i + b.c_.size() - 1] * li;
            quot[i] = cq;
            if (cq.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                rem[i + j] = rem[i + j] - cq * b.c_[j];
        }
        return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * lead().inv();
    }

    /// Substitution t -> c * t.
    Poly scale_t(const Scalar& c) const {
        std::vector<Scalar> v = c_;
        Scalar pw = field_->one();
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = v[i] * pw;
            pw = pw * c;
        }
        return Poly(field_, std::move(v));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    FieldPtr field_;
    std::vector<Scalar> c_;
};

namespace detail {

// Strips the rational content of a polynomial (gcd of numerators over lcm
// of denominators, across all q-coordinates). Keeps the integer sizes in
// Euclidean remainder sequences from exploding.
// Multiplier that clears all denominators and divides out the common
// integer factor across the q-coordinates; p * content_scale(p) is primitive.
inline mpq_class content_scale(const Poly& p) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& s : p.coeffs())
        for (const auto& c : s.coeffs()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
    if (num_gcd == 0) return mpq_class(1);
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    return scale;
}

inline Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    mpq_class scale = content_scale(p);
    if (scale == 1) return p;
    return p * p.field()->from_rational(scale);
}

inline Poly euclid_gcd(Poly a, Poly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        Poly r = primitive_part(a.divmod(b).second);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------------------
// Modular gcd over Q(q). Direct Euclid on large polynomials suffers from
// coefficient swell in the number-field coordinates, so the gcd is computed
// modulo word-size primes (treating q as a variable modulo the reduced
// cyclotomic modulus), lifted by CRT with rational reconstruction, and
// certified by exact trial division. Any failure falls back to Euclid.

using u64 = std::uint64_t;

inline u64 mg_mod(const mpz_class& a, u64 p) {
    mpz_class r = a % mpz_class(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}
inline u64 mg_mulmod(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
inline u64 mg_powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mg_mulmod(r, a, p);
        a = mg_mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}
inline u64 mg_invmod(u64 a, u64 p) { return mg_powmod(a % p, p - 2, p); }

// Residue ring GF(p)[q]/(modulus): elements are fixed-length coefficient
// vectors. The ring can have zero divisors for unlucky p; inversion reports
// failure and the caller discards the prime.
struct ModRing {
    u64 p;
    std::vector<u64> mod;  // monic image of the field modulus, length d+1
    std::size_t d;         // degree

    using Elt = std::vector<u64>;  // length d

    Elt zero() const { return Elt(d, 0); }
    bool is_zero(const Elt& a) const {
        for (u64 c : a)
            if (c) return false;
        return true;
    }
    Elt add(const Elt& a, const Elt& b) const {
        Elt r(d);
        for (std::size_t i = 0; i < d; ++i) {
            r[i] = a[i] + b[i];
            if (r[i] >= p) r[i] -= p;
        }
        return r;
    }
    Elt sub(const Elt& a, const Elt& b) const {
        Elt r(d);
        for (std::size_t i = 0; i < d; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
        return r;
    }
    Elt mul(const Elt& a, const Elt& b) const {
        std::vector<u64> w(2 * d - 1, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < d; ++j)
                if (b[j]) w[i + j] = (w[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
        }
        for (std::size_t i = 2 * d - 2; i >= d && i < w.size(); --i) {
            u64 c = w[i];
            if (!c) continue;
            w[i] = 0;
            for (std::size_t j = 0; j < d; ++j)
                w[i - d + j] = (w[i - d + j] + static_cast<unsigned __int128>(c) * (p - mod[j] % p)) % p;
        }
        w.resize(d);
        return w;
    }
    // Extended Euclid against the modulus in GF(p)[q]; false if a is a zero
    // divisor (bad prime).
    bool inv(const Elt& a, Elt& out) const {
        std::vector<u64> r0(mod), r1(a);
        while (!r1.empty() && r1.back() == 0) r1.pop_back();
        if (r1.empty()) return false;
        std::vector<u64> s0, s1{1};
        auto trim = [](std::vector<u64>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
        while (r1.size() > 1) {
            u64 li = mg_invmod(r1.back(), p);
            std::vector<u64> rem = r0, qq(r0.size() - r1.size() + 1, 0);
            for (std::size_t i = qq.size(); i-- > 0;) {
                u64 c = mg_mulmod(rem[i + r1.size() - 1], li, p);
                qq[i] = c;
                if (!c) continue;
                for (std::size_t j = 0; j < r1.size(); ++j) {
                    u64 t = mg_mulmod(c, r1[j], p);
                    rem[i + j] = rem[i + j] >= t ? rem[i + j] - t : rem[i + j] + p - t;
                }
            }
            trim(rem);
            if (rem.size() >= r1.size()) return false;  // no progress: zero divisor
            std::vector<u64> s2 = s0;
            if (!s1.empty() && !qq.empty()) {
                s2.resize(std::max(s2.size(), s1.size() + qq.size() - 1), 0);
                for (std::size_t i = 0; i < qq.size(); ++i)
                    for (std::size_t j = 0; j < s1.size(); ++j) {
                        u64 t = mg_mulmod(qq[i], s1[j], p);
                        s2[i + j] = s2[i + j] >= t ? s2[i + j] - t : s2[i + j] + p - t;
                    }
            }
            trim(s2);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
            if (r1.empty()) return false;  // gcd has positive degree: zero divisor
        }
        u64 ci = mg_invmod(r1[0], p);
        s1.resize(d, 0);
        out.assign(d, 0);
        for (std::size_t i = 0; i < d && i < s1.size(); ++i) out[i] = mg_mulmod(s1[i], ci, p);
        return true;
    }
};

// Image of a Scalar with integral coordinates; false if a coordinate
// denominator vanishes mod p.
inline bool mg_project(const ModRing& R, const Scalar& s, ModRing::Elt& out) {
    out.assign(R.d, 0);
    const auto& c = s.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        u64 den = mg_mod(c[i].get_den(), R.p);
        if (den == 0) return false;
        u64 v = mg_mulmod(mg_mod(c[i].get_num(), R.p), mg_invmod(den, R.p), R.p);
        if (i >= R.d) return false;  // coordinates exceed modulus degree: malformed
        out[i] = v;
    }
    return true;
}

// Monic gcd of the images of a and b in (GF(p)[q]/mod)[t]; false on any
// zero-divisor event.
inline bool mg_poly_gcd(const ModRing& R, const Poly& a, const Poly& b,
                        std::vector<ModRing::Elt>& out) {
    using PV = std::vector<ModRing::Elt>;
    auto project = [&](const Poly& f, PV& v) {
        v.assign(f.coeffs().size(), R.zero());
        for (std::size_t i = 0; i < f.coeffs().size(); ++i)
            if (!mg_project(R, f.coeffs()[i], v[i])) return false;
        while (!v.empty() && R.is_zero(v.back())) v.pop_back();
        return true;
    };
    PV A, B;
    if (!project(a, A) || !project(b, B)) return false;
    // Leading coefficients must survive reduction, else the degree drops and
    // the prime is unlucky.
    if (A.size() != a.coeffs().size() || B.size() != b.coeffs().size()) return false;
    while (!B.empty()) {
        ModRing::Elt li;
        if (!R.inv(B.back(), li)) return false;
        PV rem = A;
        while (rem.size() >= B.size()) {
            ModRing::Elt c = R.mul(rem.back(), li);
            std::size_t shift = rem.size() - B.size();
            for (std::size_t j = 0; j < B.size(); ++j)
                rem[shift + j] = R.sub(rem[shift + j], R.mul(c, B[j]));
            while (!rem.empty() && R.is_zero(rem.back())) rem.pop_back();
            if (rem.size() < B.size()) break;
        }
        A = std::move(B);
        B = std::move(rem);
    }
    ModRing::Elt li;
    if (!R.inv(A.back(), li)) return false;
    for (auto& c : A) c = R.mul(c, li);
    out = std::move(A);
    return true;
}

// Rational reconstruction of n/d from r mod m with |n|, d bounded by
// sqrt(m/2); false if no such fraction exists yet.
inline bool mg_ratrecon(const mpz_class& r, const mpz_class& m, mpq_class& out) {
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(m / 2).get_mpz_t());
    mpz_class r0 = m, r1 = r, t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0) return false;
    mpz_class d = t1 < 0 ? mpz_class(-t1) : t1, n = t1 < 0 ? mpz_class(-r1) : r1;
    if (d > bound) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class gm;
    mpz_gcd(gm.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    if (gm != 1) return false;
    out = mpq_class(n, d);
    out.canonicalize();
    return true;
}

inline bool mg_divides(const Poly& d, const Poly& a) {
    return a.divmod(d).second.is_zero();
}

// CRT accumulator for one candidate gcd: per (t-degree, q-coordinate)
// residues modulo the product of accepted primes.
inline std::optional<Poly> modular_gcd(const Poly& a, const Poly& b) {
    const FieldPtr& F = a.field();
    const std::size_t d = F->degree();
    std::vector<mpz_class> acc;  // flattened residues, size (deg+1)*d
    mpz_class m = 1;
    long gdeg = -2;  // degree of the candidate; -2 = none yet
    u64 p = (1ull << 62) - 57;  // start below 2^62, step to previous primes
    int used = 0, attempts = 0;
    while (attempts < 200) {
        ++attempts;
        // previous prime
        mpz_class np;
        mpz_class cur(static_cast<unsigned long>(p) - 1);
        // search downward: use nextprime on (p - small window) is awkward;
        // instead probe odd candidates with Miller-Rabin
        while (true) {
            cur -= 1;
            if (mpz_probab_prime_p(cur.get_mpz_t(), 30)) break;
        }
        p = cur.get_ui();

        ModRing R;
        R.p = p;
        R.d = d;
        R.mod.assign(d + 1, 0);
        {
            bool ok = true;
            const auto& mv = F->modulus();
            for (std::size_t i = 0; i <= d; ++i) {
                if (mv[i].get_den() != 1) { ok = false; break; }
                R.mod[i] = mg_mod(mv[i].get_num(), p);
            }
            if (!ok) continue;
        }
        std::vector<ModRing::Elt> g;
        if (!mg_poly_gcd(R, a, b, g)) continue;
        long deg = static_cast<long>(g.size()) - 1;
        if (deg == 0) return Poly::constant(F->one());  // coprime certificate
        if (gdeg == -2 || deg < gdeg) {
            gdeg = deg;
            acc.assign(static_cast<std::size_t>(deg + 1) * d, 0);
            m = 1;
            used = 0;
        } else if (deg > gdeg) {
            continue;  // unlucky prime
        }
        // CRT combine
        mpz_class pz(static_cast<unsigned long>(p));
        if (used == 0) {
            for (long i = 0; i <= gdeg; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    acc[static_cast<std::size_t>(i) * d + j] = g[static_cast<std::size_t>(i)][j];
            m = pz;
        } else {
            mpz_class minv;
            if (mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t()) == 0) continue;
            for (auto idx = std::size_t{0}; idx < acc.size(); ++idx) {
                long i = static_cast<long>(idx / d);
                std::size_t j = idx % d;
                mpz_class rp(static_cast<unsigned long>(g[static_cast<std::size_t>(i)][j]));
                mpz_class delta = ((rp - acc[idx] % pz) % pz + pz) % pz;
                acc[idx] = acc[idx] + m * ((delta * minv) % pz);
            }
            m *= pz;
        }
        ++used;
        if (used < 2 && gdeg > 0) continue;  // gather at least two primes first
        // attempt rational reconstruction
        std::vector<Scalar> cand(static_cast<std::size_t>(gdeg + 1));
        bool ok = true;
        for (long i = 0; i <= gdeg && ok; ++i) {
            std::vector<mpq_class> coords(d);
            for (std::size_t j = 0; j < d && ok; ++j)
                ok = mg_ratrecon(acc[static_cast<std::size_t>(i) * d + j], m, coords[j]);
            if (ok) cand[static_cast<std::size_t>(i)] = Scalar(F, std::move(coords));
        }
        if (!ok) continue;
        Poly G(F, std::move(cand));
        if (static_cast<long>(G.degree()) != gdeg) continue;
        if (mg_divides(G, a) && mg_divides(G, b)) return G.monic();
    }
    return std::nullopt;
}

}  // namespace detail

inline Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // Modular lifting pays off only in characteristic 0 and at scale; small
    // inputs and finite fields stay on plain Euclid. "Small" must consider
    // both degrees: dividing a large polynomial by a small one in exact
    // rational arithmetic already swells coefficients linearly in the
    // quotient degree.
    if (a.field()->characteristic() != 0 || std::max(a.degree(), b.degree()) <= 8)
        return detail::euclid_gcd(a, b);
    Poly pa = detail::primitive_part(a), pb = detail::primitive_part(b);
    if (auto g = detail::modular_gcd(pa, pb)) return *g;
    return detail::euclid_gcd(pa, pb);
}

inline Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    return (a * b).divmod(gcd(a, b)).first.monic();
}

}  // namespace qdk

#endif  // QDK_POLY_HPP
