#ifndef QDK_RATFUNC_HPP
#define QDK_RATFUNC_HPP

#include <stdexcept>
#include <utility>

#include "qdk/poly.hpp"

namespace qdk {

/// Element of K = k(t) in canonical form: reduced fraction, monic denominator.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(FieldPtr f)
        : num_(Poly(f)), den_(Poly::constant(f->one())) {}
    RatFunc(Poly num, Poly den) { assign(std::move(num), std::move(den)); }
    explicit RatFunc(Poly num) {
        Poly den = Poly::constant(num.field()->one());
        assign(std::move(num), std::move(den));
    }

    static RatFunc constant(const Scalar& s) { return RatFunc(Poly::constant(s)); }
    static RatFunc t(const FieldPtr& f) { return RatFunc(Poly::t(f)); }
    /// u = 1/((q-1) t), the coefficient of the ideal generator.
    static RatFunc u(const FieldPtr& f) {
        Scalar c = f->q() - f->one();
        return RatFunc(Poly::constant(c.inv()), Poly::t(f));
    }

    const FieldPtr& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Scalar constant_value() const {
        if (!is_constant()) throw std::domain_error("not a constant");
        return num_.coeff(0);
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-() const { return from_reduced(-num_, den_); }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const {
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator*(const Scalar& s) const { return from_reduced(num_ * s, den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("division by zero");
        return RatFunc(den_, num_);
    }
    RatFunc pow(long e) const {
        RatFunc base = *this;
        if (e < 0) {
            base = base.inv();
            e = -e;
        }
        RatFunc acc = RatFunc::constant(field()->one());
        for (long i = 0; i < e; ++i) acc = acc * base;
        return acc;
    }

    /// sigma_q^e : t -> q^e t. The substitution is a field automorphism of K,
    /// so the image of a reduced fraction is reduced; only the monic
    /// normalization of the denominator needs redoing.
    RatFunc sigma(long e = 1) const {
        Scalar c = field()->q_pow(e);
        return from_reduced(num_.scale_t(c), den_.scale_t(c));
    }

    /// Trusted constructor: the caller guarantees the fraction is already in
    /// lowest terms (denominator need not be monic).
    static RatFunc from_reduced(Poly num, Poly den) {
        RatFunc r;
        if (num.is_zero()) {
            r.num_ = Poly(num.field());
            r.den_ = Poly::constant(num.field()->one());
            return r;
        }
        Scalar li = den.lead().inv();
        r.num_ = num * li;
        r.den_ = den * li;
        return r;
    }

private:
    void assign(Poly num, Poly den) {
        if (den.is_zero()) throw std::domain_error("division by zero");
        if (num.is_zero()) {
            num_ = Poly(num.field());
            den_ = Poly::constant(num.field()->one());
            return;
        }
        Poly g = gcd(num, den);
        if (g.degree() > 0) {
            num = num.divmod(g).first;
            den = den.divmod(g).first;
        }
        Scalar li = den.lead().inv();
        num_ = num * li;
        den_ = den * li;
    }
    Poly num_;
    Poly den_;
};

}  // namespace qdk

#endif  // QDK_RATFUNC_HPP
