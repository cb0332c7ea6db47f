#ifndef QDK_RANDOM_HPP
#define QDK_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qdk/ratfunc.hpp"

namespace qdk {

constexpr std::uint64_t kDefaultSeed = 20140331;  // fixed, reported in every run

/// Deterministic generator of small exact field elements, polynomials and
/// rational functions, used by all randomized verification suites.
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {  // inclusive
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(eng_);
    }

    Scalar scalar(const FieldPtr& f) {
        // Small polynomial in q with coefficients in [-3, 3].
        std::vector<mpq_class> v(f->degree());
        for (auto& c : v) c = static_cast<long>(uniform(0, 6)) - 3;
        return Scalar(f, f->characteristic() == 0
                             ? std::move(v)
                             : normalize_char_p(f, std::move(v)));
    }

    Scalar nonzero_scalar(const FieldPtr& f) {
        for (;;) {
            Scalar s = scalar(f);
            if (!s.is_zero()) return s;
        }
    }

    Poly poly(const FieldPtr& f, long max_deg) {
        std::vector<Scalar> v;
        long d = static_cast<long>(uniform(0, max_deg));
        for (long i = 0; i <= d; ++i) v.push_back(scalar(f));
        return Poly(f, std::move(v));
    }

    Poly nonzero_poly(const FieldPtr& f, long max_deg) {
        for (;;) {
            Poly p = poly(f, max_deg);
            if (!p.is_zero()) return p;
        }
    }

    RatFunc ratfunc(const FieldPtr& f, long max_deg) {
        return RatFunc(poly(f, max_deg), nonzero_poly(f, max_deg));
    }

    RatFunc nonzero_ratfunc(const FieldPtr& f, long max_deg) {
        for (;;) {
            RatFunc r = ratfunc(f, max_deg);
            if (!r.is_zero()) return r;
        }
    }

private:
    static std::vector<mpq_class> normalize_char_p(const FieldPtr& f,
                                                   std::vector<mpq_class> v) {
        for (auto& c : v) c = f->cnorm(c);
        return v;
    }
    std::mt19937_64 eng_;
};

}  // namespace qdk

#endif  // QDK_RANDOM_HPP
