#include <catch2/catch_amalgamated.hpp>

#include "qdk/field.hpp"
#include "qdk/random.hpp"

using namespace qdk;

TEST_CASE("cyclotomic moduli") {
    // Phi_2 = x + 1, q = -1
    auto f2 = Field::make(0, 2);
    REQUIRE(f2->degree() == 1);
    REQUIRE(f2->modulus()[0] == 1);
    REQUIRE(f2->q() == f2->from_int(-1));

    // Phi_3 = x^2 + x + 1 (division of x^3 - 1 by x - 1)
    auto f3 = Field::make(0, 3);
    REQUIRE(f3->degree() == 2);
    REQUIRE(f3->modulus()[0] == 1);
    REQUIRE(f3->modulus()[1] == 1);
    REQUIRE(f3->modulus()[2] == 1);

    // Phi_4: q^2 = -1, q^4 = 1, q^2 != 1
    auto f4 = Field::make(0, 4);
    Scalar q = f4->q();
    REQUIRE(q.pow(2) == f4->from_int(-1));
    REQUIRE(q.pow(4) == f4->one());
    REQUIRE(q.pow(2) != f4->one());

    auto f6 = Field::make(0, 6);
    REQUIRE(f6->degree() == 2);
}

TEST_CASE("field_make error cases") {
    REQUIRE_THROWS_AS(Field::make(0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(Field::make(3, 6), std::invalid_argument);  // p | N
}

TEST_CASE("char p field") {
    auto f = Field::make(5, 3);
    // ord of 5 mod 3 is 2, so the modulus is an irreducible quadratic factor
    // of Phi_3 = x^2 + x + 1 mod 5, i.e. Phi_3 itself.
    REQUIRE(f->degree() == 2);
    Scalar q = f->q();
    REQUIRE(q.pow(3) == f->one());
    REQUIRE(q != f->one());
    REQUIRE(q.pow(2) != f->one());
    // 5 = 0 in F_5
    REQUIRE(f->from_int(5).is_zero());
    REQUIRE(f->from_int(3) * f->from_int(2) == f->one());
}

TEST_CASE("char p field with splitting modulus") {
    // p = 5, N = 4: 5 = 1 mod 4, so Phi_4 = x^2 + 1 splits; factors are
    // x + 2 and x + 3, the least being x + 2 (q = 3).
    auto f = Field::make(5, 4);
    REQUIRE(f->degree() == 1);
    REQUIRE(f->modulus()[0] == 2);
    Scalar q = f->q();
    REQUIRE(q == f->from_int(3));
    REQUIRE(q.pow(4) == f->one());
    REQUIRE(q.pow(2) != f->one());
}

TEST_CASE("scalar arithmetic basics") {
    auto f = Field::make(0, 3);
    Scalar q = f->q();
    REQUIRE(q * q.pow(2) == f->one());  // q * q^(N-1) = 1
    REQUIRE((q - q).is_zero());

    // inv(1 + q) = -q for N = 3, since (1+q)(-q) = -q - q^2 = 1
    Scalar s = f->one() + q;
    REQUIRE(s.inv() == -q);
    REQUIRE(s * s.inv() == f->one());

    REQUIRE_THROWS_AS(f->zero().inv(), std::domain_error);
}

TEST_CASE("field axioms hold on random elements") {
    for (unsigned long N : {2ul, 3ul, 4ul, 6ul}) {
        auto f = Field::make(0, N);
        Rng rng(7 + N);
        for (int i = 0; i < 30; ++i) {
            Scalar a = rng.scalar(f), b = rng.scalar(f), c = rng.scalar(f);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) REQUIRE(a * a.inv() == f->one());
        }
    }
}

TEST_CASE("powers of q are pairwise distinct") {
    for (unsigned long N : {2ul, 3ul, 4ul, 6ul}) {
        auto f = Field::make(0, N);
        std::vector<Scalar> pows;
        for (unsigned long j = 0; j < N; ++j) pows.push_back(f->q_pow(static_cast<long>(j)));
        for (unsigned long i = 0; i < N; ++i)
            for (unsigned long j = i + 1; j < N; ++j) REQUIRE(pows[i] != pows[j]);
        REQUIRE(f->q_pow(static_cast<long>(N)) == f->one());
    }
}

TEST_CASE("scalar printing") {
    auto f = Field::make(0, 4);
    Scalar q = f->q();
    Scalar s = q * f->from_rational(mpq_class(1, 2)) - f->from_int(3);
    REQUIRE(s.str() == "1/2*q - 3");
    REQUIRE(f->zero().str() == "0");
}
