#include <catch2/catch_amalgamated.hpp>

#include "qdk/qcomb.hpp"

using namespace qdk;

TEST_CASE("q-integers") {
    auto f = Field::make(0, 3);
    REQUIRE(q_int(f, 0).is_zero());
    REQUIRE(q_int(f, 1) == f->one());
    REQUIRE(q_int(f, 2) == f->one() + f->q());
    REQUIRE(q_int(f, 3).is_zero());  // [N]_q = 0 at a primitive N-th root
    for (unsigned long N : {2ul, 4ul, 6ul}) {
        auto g = Field::make(0, N);
        REQUIRE(q_int(g, N).is_zero());
    }
}

TEST_CASE("q-binomials, small values") {
    auto f = Field::make(0, 3);
    for (unsigned long n = 0; n <= 6; ++n) REQUIRE(q_binom(f, n, 0) == f->one());
    REQUIRE(q_binom(f, 2, 1) == f->one() + f->q());

    auto f2 = Field::make(0, 2);
    // C(4,2)_q at q = -1 equals the ordinary C(2,1) = 2
    REQUIRE(q_binom(f2, 4, 2) == f2->from_int(2));

    REQUIRE_THROWS_AS(q_binom(f, 1, 2), std::invalid_argument);
}

TEST_CASE("binom(rN, sN)_q = binom(r, s)") {
    for (unsigned long N : {2ul, 3ul, 4ul, 5ul, 6ul}) {
        auto f = Field::make(0, N);
        for (unsigned long r = 0; r <= 6; ++r)
            for (unsigned long s = 0; s <= r; ++s)
                REQUIRE(q_binom(f, r * N, s * N) == f->binom(r, s));
    }
}

TEST_CASE("q-Lucas factorization") {
    for (unsigned long N : {2ul, 3ul, 4ul, 6ul}) {
        auto f = Field::make(0, N);
        for (unsigned long a = 0; a <= 5; ++a)
            for (unsigned long c = 0; c <= a; ++c)
                for (unsigned long b = 0; b < N; ++b)
                    for (unsigned long d = 0; d < N; ++d) {
                        if (c * N + d > a * N + b) continue;
                        Scalar lhs = q_binom(f, a * N + b, c * N + d);
                        Scalar rhs = d <= b ? f->binom(a, c) * q_binom(f, b, d) : f->zero();
                        REQUIRE(lhs == rhs);
                    }
    }
}

TEST_CASE("symmetry") {
    for (unsigned long N : {2ul, 3ul, 5ul}) {
        auto f = Field::make(0, N);
        for (unsigned long r = 0; r <= 10; ++r)
            for (unsigned long s = 0; s <= r; ++s)
                REQUIRE(q_binom(f, r, s) == q_binom(f, r, r - s));
    }
}

TEST_CASE("q-combinatorics in char p") {
    auto f = Field::make(5, 3);
    REQUIRE(q_int(f, 3).is_zero());
    for (unsigned long r = 0; r <= 4; ++r)
        for (unsigned long s = 0; s <= r; ++s)
            REQUIRE(q_binom(f, 3 * r, 3 * s) == f->binom(r, s));
    // ordinary binomial reduces mod p: C(5,1) = 5 = 0 in F_5
    REQUIRE(f->binom(5, 1).is_zero());
}
