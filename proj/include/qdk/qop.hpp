#ifndef QDK_QOP_HPP
#define QDK_QOP_HPP

#include <string>

#include "qdk/format.hpp"
#include "qdk/qcomb.hpp"
#include "qdk/random.hpp"
#include "qdk/ratfunc.hpp"
#include "qdk/report.hpp"

namespace qdk {

/// delta^(k) on k[t]: linear extension of delta^(k)(t^n) = C(n,k)_q t^(n-k).
inline Poly delta_poly(unsigned long k, const Poly& f) {
    const FieldPtr& F = f.field();
    if (k == 0) return f;
    Poly out(F);
    for (long n = static_cast<long>(k); n <= f.degree(); ++n) {
        Scalar c = f.coeff(static_cast<std::size_t>(n));
        if (c.is_zero()) continue;
        out = out + Poly::monomial(F, static_cast<std::size_t>(n - static_cast<long>(k)),
                                   c * q_binom(F, static_cast<unsigned long>(n), k));
    }
    return out;
}

/// delta^(k) on K = k(t), by the denominator recursion: for f = p/s,
///   delta^(k)(f) = [delta^(k)(p) - sum_{i+j=k, i>0} sigma^i(delta^(j)(f)) delta^(i)(s)] / s,
/// well-founded in j < k. This avoids k-fold application of delta^(1)/[k]_q!,
/// which is undefined for k >= N.
inline std::vector<RatFunc> delta_table(unsigned long k_max, const RatFunc& f) {
    const FieldPtr& F = f.field();
    std::vector<RatFunc> d(k_max + 1, RatFunc(F));  // d[j] = delta^(j)(f)
    d[0] = f;
    if (f.is_polynomial()) {
        for (unsigned long kk = 1; kk <= k_max; ++kk) d[kk] = RatFunc(delta_poly(kk, f.num()));
        return d;
    }
    // For f = p/s, delta^(k)(f) has denominator dividing s sigma(s)...sigma^k(s).
    // Work with numerators over that product: from the Leibniz rule applied to
    // s * (1/s), the numerator g[i] of delta^(i)(1/s) over s...sigma^i(s) obeys
    //   g[i] = -sum_{l<i} sigma^l(delta^(i-l)(s)) g[l] prod_{j=l+1}^{i-1} sigma^j(s),
    // and then
    //   delta^(k)(p/s) = [sum_i sigma^i(delta^(k-i)(p)) g[i] prod_{j=i+1}^{k} sigma^j(s)]
    //                    / prod_{j=0}^{k} sigma^j(s).
    // Everything stays polynomial; the one reduction per k runs against the
    // small shift factors instead of a blind large-degree gcd.
    // Normalize to primitive integer-coordinate polynomials: rational
    // content turns every coefficient product into a hidden gcd, and the
    // recursion below multiplies thousands of them. f = scale * p/s with
    // p, s primitive; the scale is reapplied at the end.
    mpq_class ap = detail::content_scale(f.num()), as = detail::content_scale(f.den());
    const Poly p = f.num() * F->from_rational(ap);
    const Poly s = f.den() * F->from_rational(as);
    const Scalar scale = F->from_rational(mpq_class(as / ap));
    std::vector<Poly> dp(k_max + 1), ds(k_max + 1), sh(k_max + 1);
    for (unsigned long i = 0; i <= k_max; ++i) {
        dp[i] = delta_poly(i, p);
        ds[i] = delta_poly(i, s);
        sh[i] = s.scale_t(F->q_pow(static_cast<long>(i)));
    }
    // Both sums telescope in Horner form: sum_l b_l prod_{j=l+1}^{m} sh[j]
    // = (...(b_0 sh[1] + b_1) sh[2] + ...) sh[m] + b_m.
    std::vector<Poly> g(k_max + 1);
    g[0] = Poly::constant(F->one());
    for (unsigned long i = 1; i <= k_max; ++i) {
        Poly acc = ds[i];  // b_0 = ds[i] * g[0]
        for (unsigned long l = 1; l < i; ++l)
            acc = acc * sh[l] + ds[i - l].scale_t(F->q_pow(static_cast<long>(l))) * g[l];
        g[i] = -acc;
    }
    for (unsigned long k = 1; k <= k_max; ++k) {
        Poly n = dp[k];  // b_0 = dp[k] * g[0]
        for (unsigned long i = 1; i <= k; ++i)
            n = n * sh[i] + dp[k - i].scale_t(F->q_pow(static_cast<long>(i))) * g[i];
        Poly den = Poly::constant(F->one());
        for (unsigned long j = 0; j <= k && !n.is_zero(); ++j) {
            Poly fac = sh[j];
            while (fac.degree() > 0) {
                Poly h = gcd(n, fac);
                if (h.degree() <= 0) break;
                n = n.divmod(h).first;
                fac = fac.divmod(h).first;
            }
            den = den * fac;
        }
        d[k] = n.is_zero() ? RatFunc(F)
                           : RatFunc::from_reduced(n * scale, std::move(den));
    }
    return d;
}

inline RatFunc delta_ratfunc(unsigned long k, const RatFunc& f) {
    if (k == 0) return f;
    if (f.is_polynomial()) return RatFunc(delta_poly(k, f.num()));
    return delta_table(k, f)[k];
}

/// Checks the defining axioms of the iterative q-difference operator and the
/// derived identities, on seeded pseudo-random rational functions. All
/// comparisons are exact.
inline Report verify_operator_axioms(const FieldPtr& F, long deg_bound, unsigned long k_bound,
                                     unsigned long trials, std::uint64_t seed = kDefaultSeed) {
    Report rep;
    rep.suite = "qop";
    rep.seed = seed;
    Rng rng(seed);
    const unsigned long N = F->order();
    const RatFunc one = RatFunc::constant(F->one());
    const RatFunc t = RatFunc::t(F);

    auto record = [&](const std::string& id, bool ok, const std::string& wit) {
        // keep only the first counterexample per identity
        for (auto& r : rep.results)
            if (r.identity == id) {
                if (!ok && r.pass) { r.pass = false; r.witness = wit; }
                return;
            }
        rep.add(id, ok, ok ? "" : wit);
    };

    // Structural identities on t and constants.
    record("axiom1: delta^(0) = id", delta_ratfunc(0, t) == t, "t");
    {
        RatFunc lhs = delta_ratfunc(1, t);
        record("lemma3.3c: delta^(1)(t) = 1", lhs == one, to_string(lhs));
    }
    {
        bool ok = true;
        std::string wit;
        for (unsigned long k = 2; k <= k_bound && ok; ++k)
            if (!delta_ratfunc(k, t).is_zero()) {
                ok = false;
                wit = "k=" + std::to_string(k);
            }
        record("lemma3.3d: delta^(k)(t) = 0, k > 1", ok, wit);
    }

    for (unsigned long trial = 0; trial < trials; ++trial) {
        RatFunc x = rng.ratfunc(F, deg_bound);
        RatFunc y = rng.ratfunc(F, deg_bound);
        const std::string wit = "trial " + std::to_string(trial) + ", x = " + to_string(x);

        auto dx = delta_table(k_bound, x);
        auto dy = delta_table(k_bound, y);
        auto dsum = delta_table(k_bound, x + y);
        auto dprod = delta_table(k_bound, x * y);
        auto dsx = delta_table(k_bound, x.sigma(1));

        // Running products S*[k] = prod_{j<=k} sigma^j(den): a common multiple
        // of every denominator in the corresponding table, so sums can be
        // compared by cross-multiplication without any gcd work.
        std::vector<Poly> Sx(k_bound + 1), Sy(k_bound + 1);
        Sx[0] = x.den();
        Sy[0] = y.den();
        for (unsigned long j = 1; j <= k_bound; ++j) {
            Sx[j] = Sx[j - 1] * x.den().scale_t(F->q_pow(static_cast<long>(j)));
            Sy[j] = Sy[j - 1] * y.den().scale_t(F->q_pow(static_cast<long>(j)));
        }
        // a == n/D, with every term denominator dividing D.
        auto cross_eq = [](const RatFunc& a, const Poly& n, const Poly& D) {
            return a.num() * D == a.den() * n;
        };

        // Lemma 3.3(a): sigma^N = id.
        record("lemma3.3a: sigma^N = id", x.sigma(static_cast<long>(N)) == x, wit);

        // Axiom (2): delta^(1) = (sigma - id)/((q-1)t).
        record("axiom2: delta^(1) = u(sigma - id)",
               dx[1] == (x.sigma(1) - x) * RatFunc::u(F), wit);

        for (unsigned long k = 1; k <= k_bound; ++k) {
            // Axiom (3): additivity, via dsum = (n1 d2 + n2 d1)/(d1 d2).
            record("axiom3: additivity",
                   cross_eq(dsum[k], dx[k].num() * dy[k].den() + dy[k].num() * dx[k].den(),
                            dx[k].den() * dy[k].den()),
                   wit);

            // Axiom (4), both Leibniz forms, accumulated over the known common
            // denominator D = Sx[k] Sy[k].
            {
                Poly D = Sx[k] * Sy[k];
                Poly rhs(F), rhs2(F);
                for (unsigned long i = 0; i <= k; ++i) {
                    Scalar qi = F->q_pow(static_cast<long>(i));
                    // sigma^i(delta^(k-i)(x)) * delta^(i)(y)
                    Poly d1 = dx[k - i].den().scale_t(qi) * dy[i].den();
                    rhs = rhs + dx[k - i].num().scale_t(qi) * dy[i].num() *
                                    D.divmod(d1).first;
                    // delta^(i)(x) * sigma^i(delta^(k-i)(y))
                    Poly d2 = dx[i].den() * dy[k - i].den().scale_t(qi);
                    rhs2 = rhs2 + dx[i].num() * dy[k - i].num().scale_t(qi) *
                                      D.divmod(d2).first;
                }
                record("axiom4: Leibniz (twist on left factor)", cross_eq(dprod[k], rhs, D), wit);
                record("axiom4': Leibniz (twist on right factor)", cross_eq(dprod[k], rhs2, D), wit);
            }

            // Lemma 3.3(e): delta^(k) o sigma = q^k sigma o delta^(k).
            record("lemma3.3e: delta^(k) sigma = q^k sigma delta^(k)",
                   dsx[k] == dx[k].sigma(1) * F->q_pow(static_cast<long>(k)), wit);
        }

        // Axiom (5): delta^(i) o delta^(j) = C(i+j,i)_q delta^(i+j). The
        // interesting boundary is i+j crossing N, where the Gaussian binomial
        // vanishes; depth is capped at N+2 to keep the composite recursions
        // (whose degrees grow multiplicatively) inside the runtime budget.
        const unsigned long k5 = std::min(k_bound, N + 2);
        for (unsigned long j = 0; j <= k5; ++j) {
            auto ddx = delta_table(k5 - j, dx[j]);
            for (unsigned long i = 0; i + j <= k5; ++i)
                record("axiom5: iteration rule",
                       ddx[i] == dx[i + j] * q_binom(F, i + j, i),
                       wit + ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
        }

        // (delta^(1))^N = 0.
        {
            RatFunc v = x;
            for (unsigned long i = 0; i < N; ++i) v = delta_ratfunc(1, v);
            record("nilpotence: (delta^(1))^N = 0", v.is_zero(), wit);
        }

        // delta^(k) of a constant vanishes for k > 0.
        record("constants: delta^(k)(c) = 0, k > 0",
               delta_ratfunc(1, RatFunc::constant(rng.scalar(F))).is_zero(), wit);

        // delta_ratfunc restricted to polynomials agrees with delta_poly.
        {
            Poly p = rng.poly(F, deg_bound);
            bool ok = true;
            for (unsigned long k = 1; k <= k_bound && ok; ++k)
                ok = delta_ratfunc(k, RatFunc(p)) == RatFunc(delta_poly(k, p));
            record("consistency: delta on k[t] agrees with delta_poly", ok, wit);
        }
    }

    rep.sort();
    return rep;
}

}  // namespace qdk

#endif  // QDK_QOP_HPP
