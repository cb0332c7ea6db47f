#ifndef QDK_FIELD_HPP
#define QDK_FIELD_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdk {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of the coefficient field k = Q(q) (or F_p(q)), stored as a
/// residue-class polynomial in q of degree < deg(modulus), coefficients
/// in lowest terms (resp. reduced mod p).
class Scalar {
public:
    Scalar() = default;
    Scalar(FieldPtr f, std::vector<mpq_class> coeffs)
        : field_(std::move(f)), c_(std::move(coeffs)) {
        trim();
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    bool operator==(const Scalar& o) const { return c_ == o.c_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const {  // ordering for map keys / determinism
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        return false;
    }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;
    Scalar pow(long e) const;

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    FieldPtr field_;
    std::vector<mpq_class> c_;
    friend class Field;
};

/// The field k = k0(q) with q a primitive N-th root of unity: k0 = Q and
/// modulus = Phi_N, or k0 = F_p (p not dividing N) and modulus a
/// deterministically chosen irreducible factor of Phi_N mod p.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr make(unsigned long characteristic, unsigned long N);

    unsigned long characteristic() const { return p_; }
    unsigned long order() const { return N_; }
    std::size_t degree() const { return modulus_.size() - 1; }
    const std::vector<mpq_class>& modulus() const { return modulus_; }

    FieldPtr self() const { return shared_from_this(); }

    Scalar zero() const { return Scalar(self(), {}); }
    Scalar one() const { return from_int(1); }
    Scalar q() const;
    Scalar q_pow(long e) const;
    Scalar from_int(long v) const { return from_int(mpz_class(v)); }
    Scalar from_int(const mpz_class& v) const;
    Scalar from_rational(const mpq_class& v) const;

    /// Builds a Scalar from raw q-coordinates of any length, reducing modulo
    /// the field modulus. Lets polynomial kernels accumulate coordinatewise
    /// and reduce once per coefficient.
    Scalar from_coords(std::vector<mpq_class> v) const {
        return Scalar(self(), reduce(std::move(v)));
    }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;

    // q-combinatorics (see qcomb.hpp for the free-function layer).
    Scalar q_int(unsigned long k) const;
    Scalar q_factorial(unsigned long k) const;
    Scalar q_binom(unsigned long r, unsigned long s) const;
    Scalar binom(unsigned long r, unsigned long s) const;  // ordinary C(r,s) in k

    // Base-coefficient helpers (rationals in char 0, residues mod p else).
    mpq_class cnorm(const mpq_class& a) const;
    mpq_class cinv(const mpq_class& a) const;

private:
    Field(unsigned long p, unsigned long N, std::vector<mpq_class> modulus)
        : p_(p), N_(N), modulus_(std::move(modulus)) {}

    std::vector<mpq_class> reduce(std::vector<mpq_class> v) const;

    unsigned long p_;
    unsigned long N_;
    std::vector<mpq_class> modulus_;  // monic, index = degree

    mutable std::mutex memo_mu_;
    mutable std::map<std::pair<unsigned long, unsigned long>, Scalar> qbinom_memo_;
};

// ---------------------------------------------------------------------------
// Cyclotomic polynomial machinery (integer coefficients).

namespace detail {

inline std::vector<mpz_class> zpoly_mul(const std::vector<mpz_class>& a,
                                        const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division of integer polynomials, monic divisor.
inline std::vector<mpz_class> zpoly_div_exact(std::vector<mpz_class> a,
                                              const std::vector<mpz_class>& b) {
    if (b.empty() || b.back() != 1) throw std::logic_error("divisor not monic");
    std::vector<mpz_class> quot(a.size() - b.size() + 1, mpz_class(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpz_class c = a[i + b.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    for (const auto& c : a)
        if (c != 0) throw std::logic_error("inexact polynomial division");
    return quot;
}

inline std::vector<mpz_class> cyclotomic(unsigned long N) {
    // x^N - 1 divided by the product of Phi_d over proper divisors d of N.
    std::vector<mpz_class> num(N + 1, mpz_class(0));
    num[0] = -1;
    num[N] = 1;
    std::vector<mpz_class> den{1};
    for (unsigned long d = 1; d < N; ++d)
        if (N % d == 0) den = zpoly_mul(den, cyclotomic(d));
    return zpoly_div_exact(std::move(num), den);
}

inline mpz_class mod_p(const mpz_class& a, unsigned long p) {
    mpz_class r = a % mpz_class(p);
    if (r < 0) r += p;
    return r;
}

// Polynomials over F_p as mpz vectors with entries in [0,p).
using FpPoly = std::vector<mpz_class>;

inline void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, unsigned long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod_p(r[i + j] + a[i] * b[j], p);
    fp_trim(r);
    return r;
}

inline mpz_class fp_inv(const mpz_class& a, unsigned long p) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
        throw std::domain_error("division by zero");
    return r;
}

inline FpPoly fp_rem(FpPoly a, const FpPoly& b, unsigned long p) {
    mpz_class lead_inv = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        mpz_class c = mod_p(a.back() * lead_inv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = mod_p(a[shift + j] - c * b[j], p);
        fp_trim(a);
        if (a.size() < b.size()) break;
    }
    fp_trim(a);
    return a;
}

inline bool fp_divides(const FpPoly& b, const FpPoly& a, unsigned long p) {
    return fp_rem(a, b, p).empty();
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline FieldPtr Field::make(unsigned long characteristic, unsigned long N) {
    if (N < 2) throw std::invalid_argument("order must exceed 1");
    if (characteristic != 0 && N % characteristic == 0)
        throw std::invalid_argument("degenerate root order");

    std::vector<mpz_class> phi = detail::cyclotomic(N);
    std::vector<mpq_class> modulus;

    if (characteristic == 0) {
        modulus.reserve(phi.size());
        for (const auto& c : phi) modulus.emplace_back(c);
    } else {
        const unsigned long p = characteristic;
        detail::FpPoly phip;
        phip.reserve(phi.size());
        for (const auto& c : phi) phip.push_back(detail::mod_p(c, p));
        detail::fp_trim(phip);
        // Degree of every irreducible factor of Phi_N mod p is the
        // multiplicative order of p mod N.
        unsigned long d = 1;
        {
            mpz_class pw = detail::mod_p(mpz_class(p), N);
            while (pw != 1) {
                pw = detail::mod_p(pw * p, N);
                ++d;
            }
        }
        // Deterministic factor choice: least monic degree-d divisor in
        // coefficient order (leading-to-constant, digits in [0,p)).
        detail::FpPoly factor;
        std::vector<unsigned long> digits(d, 0);  // digits[i] = coeff of x^(d-1-i)
        bool found = false;
        while (!found) {
            detail::FpPoly cand(d + 1, mpz_class(0));
            cand[d] = 1;
            for (unsigned long i = 0; i < d; ++i) cand[d - 1 - i] = digits[i];
            if (detail::fp_divides(cand, phip, p)) {
                factor = cand;
                found = true;
                break;
            }
            long pos = static_cast<long>(d) - 1;
            while (pos >= 0 && digits[pos] == p - 1) digits[pos--] = 0;
            if (pos < 0) throw std::logic_error("no irreducible factor found");
            ++digits[pos];
        }
        modulus.reserve(factor.size());
        for (const auto& c : factor) modulus.emplace_back(c);
    }

    auto f = FieldPtr(new Field(characteristic, N, std::move(modulus)));
    // Primitivity check by direct powering.
    Scalar qq = f->q();
    Scalar acc = qq;
    for (unsigned long j = 1; j < N; ++j) {
        if (acc == f->one()) throw std::logic_error("q is not a primitive root");
        acc = f->mul(acc, qq);
    }
    if (!(acc == f->one())) throw std::logic_error("q^N != 1");
    return f;
}

inline mpq_class Field::cnorm(const mpq_class& a) const {
    if (p_ == 0) return a;
    // In char p all values are integers; reduce to [0,p).
    mpq_class r = a;
    r.canonicalize();
    if (r.get_den() != 1) throw std::logic_error("non-integral residue in char p");
    return mpq_class(detail::mod_p(r.get_num(), p_));
}

inline mpq_class Field::cinv(const mpq_class& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    if (p_ == 0) return 1 / a;
    return mpq_class(detail::fp_inv(a.get_num(), p_));
}

inline std::vector<mpq_class> Field::reduce(std::vector<mpq_class> v) const {
    const std::size_t d = degree();
    if (p_ == 0) {
        // mpq arithmetic is already canonical in characteristic 0.
        while (v.size() > d) {
            mpq_class c = std::move(v.back());
            v.pop_back();
            if (c == 0) continue;
            const std::size_t shift = v.size() - d;
            for (std::size_t j = 0; j < d; ++j) v[shift + j] -= c * modulus_[j];
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    }
    while (v.size() > d) {
        mpq_class c = cnorm(v.back());
        v.pop_back();
        if (c == 0) continue;
        const std::size_t shift = v.size() - d;
        for (std::size_t j = 0; j < d; ++j)
            v[shift + j] = cnorm(v[shift + j] - c * modulus_[j]);
    }
    for (auto& c : v) c = cnorm(c);
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

inline Scalar Field::from_int(const mpz_class& v) const {
    return from_rational(mpq_class(v));
}

inline Scalar Field::from_rational(const mpq_class& v) const {
    mpq_class c = v;
    c.canonicalize();
    if (p_ != 0) {
        mpz_class num = c.get_num(), den = c.get_den();
        c = mpq_class(detail::mod_p(num * detail::fp_inv(detail::mod_p(den, p_), p_), p_));
    }
    std::vector<mpq_class> coeffs;
    if (c != 0) coeffs.push_back(c);
    return Scalar(self(), std::move(coeffs));
}

inline Scalar Field::q() const {
    if (degree() == 1) {
        // q is the root of a linear modulus x + c, i.e. q = -c.
        return from_rational(cnorm(-modulus_[0]));
    }
    std::vector<mpq_class> v(2, mpq_class(0));
    v[1] = 1;
    return Scalar(self(), std::move(v));
}

inline Scalar Field::q_pow(long e) const {
    long r = e % static_cast<long>(N_);
    if (r < 0) r += N_;
    Scalar acc = one(), base = q();
    for (long i = 0; i < r; ++i) acc = mul(acc, base);
    return acc;
}

inline Scalar Field::add(const Scalar& a, const Scalar& b) const {
    std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    for (auto& c : v) c = cnorm(c);
    return Scalar(self(), std::move(v));
}

inline Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

inline Scalar Field::neg(const Scalar& a) const {
    std::vector<mpq_class> v = a.c_;
    for (auto& c : v) c = cnorm(-c);
    return Scalar(self(), std::move(v));
}

inline Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Scalar(self(), reduce(std::move(v)));
}

inline Scalar Field::inv(const Scalar& a) const {
    if (a.is_zero()) throw std::domain_error("division by zero");
    // Extended Euclid for a against the modulus, over the prime field.
    using V = std::vector<mpq_class>;
    V r0 = modulus_, r1 = a.c_;
    V s0, s1{1};
    auto deg = [](const V& v) { return static_cast<long>(v.size()) - 1; };
    auto trim = [](V& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
    while (!r1.empty() && deg(r1) > 0) {
        // r0 = qq*r1 + r2
        V qq(r0.size() - r1.size() + 1, mpq_class(0));
        V rem = r0;
        mpq_class li = cinv(r1.back());
        for (std::size_t i = qq.size(); i-- > 0;) {
            mpq_class c = cnorm(rem[i + r1.size() - 1] * li);
            qq[i] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < r1.size(); ++j)
                rem[i + j] = cnorm(rem[i + j] - c * r1[j]);
        }
        trim(rem);
        // s2 = s0 - qq*s1
        V s2 = s0;
        if (!s1.empty() && !qq.empty()) {
            V prod(s1.size() + qq.size() - 1, mpq_class(0));
            for (std::size_t i = 0; i < qq.size(); ++i)
                for (std::size_t j = 0; j < s1.size(); ++j) prod[i + j] += qq[i] * s1[j];
            if (s2.size() < prod.size()) s2.resize(prod.size(), mpq_class(0));
            for (std::size_t i = 0; i < prod.size(); ++i) s2[i] = cnorm(s2[i] - prod[i]);
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::domain_error("division by zero");
    mpq_class li = cinv(r1[0]);
    for (auto& c : s1) c = cnorm(c * li);
    return Scalar(self(), reduce(std::move(s1)));
}

inline Scalar Field::q_int(unsigned long k) const {
    // [k]_q = 1 + q + ... + q^(k-1); the empty sum gives [0]_q = 0 here,
    // the factorial convention [0]_q = 1 lives in q_factorial.
    Scalar acc = zero(), pw = one();
    for (unsigned long i = 0; i < k; ++i) {
        acc = add(acc, pw);
        pw = mul(pw, q());
    }
    return acc;
}

inline Scalar Field::q_factorial(unsigned long k) const {
    Scalar acc = one();
    for (unsigned long i = 1; i <= k; ++i) acc = mul(acc, q_int(i));
    return acc;
}

inline Scalar Field::q_binom(unsigned long r, unsigned long s) const {
    if (s > r) throw std::invalid_argument("out of range");
    if (s == 0 || s == r) return one();
    {
        std::lock_guard<std::mutex> lk(memo_mu_);
        auto it = qbinom_memo_.find({r, s});
        if (it != qbinom_memo_.end()) return it->second;
    }
    // q-Pascal: C(r,s)_q = C(r-1,s-1)_q + q^s C(r-1,s)_q. Never the factorial
    // quotient, which vanishes at roots of unity.
    Scalar v = add(q_binom(r - 1, s - 1), mul(q_pow(static_cast<long>(s)), q_binom(r - 1, s)));
    std::lock_guard<std::mutex> lk(memo_mu_);
    qbinom_memo_.insert({{r, s}, v});
    return v;
}

inline Scalar Field::binom(unsigned long r, unsigned long s) const {
    if (s > r) return zero();
    mpz_class v;
    mpz_bin_uiui(v.get_mpz_t(), r, s);
    return from_int(v);
}

// Scalar operator sugar.
inline Scalar Scalar::operator+(const Scalar& o) const { return field_->add(*this, o); }
inline Scalar Scalar::operator-(const Scalar& o) const { return field_->sub(*this, o); }
inline Scalar Scalar::operator*(const Scalar& o) const { return field_->mul(*this, o); }
inline Scalar Scalar::operator/(const Scalar& o) const { return field_->mul(*this, field_->inv(o)); }
inline Scalar Scalar::operator-() const { return field_->neg(*this); }
inline Scalar Scalar::inv() const { return field_->inv(*this); }

inline Scalar Scalar::pow(long e) const {
    Scalar base = *this;
    if (e < 0) {
        base = base.inv();
        e = -e;
    }
    Scalar acc = field_->one();
    for (long i = 0; i < e; ++i) acc = field_->mul(acc, base);
    return acc;
}

inline std::string Scalar::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        mpq_class a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool unit = (a == 1);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (!unit) os << a.get_str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace qdk

#endif  // QDK_FIELD_HPP
