#include <catch2/catch_amalgamated.hpp>

#include "qdk/format.hpp"
#include "qdk/random.hpp"
#include "qdk/ratfunc.hpp"

using namespace qdk;

TEST_CASE("canonical forms") {
    auto f = Field::make(0, 3);
    RatFunc t = RatFunc::t(f);

    REQUIRE(t / t == RatFunc::constant(f->one()));

    // 1/((q-1)t) is stored with monic denominator t and numerator 1/(q-1)
    RatFunc u = RatFunc::u(f);
    REQUIRE(u.den() == Poly::t(f));
    REQUIRE(u.num() == Poly::constant((f->q() - f->one()).inv()));

    // (t^2 - 1)/(t - 1) = t + 1
    Poly t2m1 = Poly::monomial(f, 2, f->one()) - Poly::constant(f->one());
    Poly tm1 = Poly::t(f) - Poly::constant(f->one());
    RatFunc r(t2m1, tm1);
    REQUIRE(r == t + RatFunc::constant(f->one()));

    REQUIRE_THROWS_AS(t / RatFunc(f), std::domain_error);
}

TEST_CASE("sigma shift") {
    auto f = Field::make(0, 3);
    RatFunc t = RatFunc::t(f);

    REQUIRE(t.sigma(1) == t * f->q());

    // sigma(u) = u/q where u = 1/((q-1)t)
    RatFunc u = RatFunc::u(f);
    REQUIRE(u.sigma(1) == u * f->q().inv());

    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        RatFunc x = rng.ratfunc(f, 5);
        REQUIRE(x.sigma(3) == x);  // sigma^N = id
        RatFunc y = rng.ratfunc(f, 5);
        // automorphism: commutes with arithmetic
        REQUIRE((x + y).sigma(1) == x.sigma(1) + y.sigma(1));
        REQUIRE((x * y).sigma(1) == x.sigma(1) * y.sigma(1));
        // composition law
        REQUIRE(x.sigma(1).sigma(2) == x.sigma(3));
        REQUIRE(x.sigma(2).sigma(-1) == x.sigma(1));
    }
}

TEST_CASE("ratfunc field axioms") {
    auto f = Field::make(0, 4);
    Rng rng(5);
    for (int i = 0; i < 15; ++i) {
        RatFunc a = rng.ratfunc(f, 4), b = rng.ratfunc(f, 4), c = rng.ratfunc(f, 4);
        REQUIRE((a + b) * c == a * c + b * c);
        REQUIRE((a * b) * c == a * (b * c));
        if (!a.is_zero()) REQUIRE(a * a.inv() == RatFunc::constant(f->one()));
    }
}

TEST_CASE("formatting round trip sanity") {
    auto f = Field::make(0, 3);
    RatFunc t = RatFunc::t(f);
    REQUIRE(to_string(t * f->q()) == "q*t");
    REQUIRE(to_string(RatFunc(f)) == "0");
    RatFunc r = (t * t + RatFunc::constant(f->q())) / (t - RatFunc::constant(f->one()));
    REQUIRE(to_string(r) == "(t^2 + q)/(t - 1)");
}
