#include <catch2/catch_amalgamated.hpp>

#include "qdk/hscript.hpp"

using namespace qdk;

TEST_CASE("smash relations reduce to normal form") {
    auto f = Field::make(0, 3);
    ScriptHElem one = ScriptHElem::one(f);
    ScriptHElem sg = ScriptHElem::sigma(f);
    RatFunc u = RatFunc::u(f);

    // delta collapses onto u(sigma - 1)
    REQUIRE(reduce(f, SmashWord::delta(1)) == (sg - one).scaled(u));

    // delta t = (q/(q-1)) sigma - 1/(q-1)
    Scalar qm1 = (f->q() - f->one()).inv();
    REQUIRE(reduce(f, SmashWord::delta(1) * SmashWord::coeff(RatFunc::t(f))) ==
            sg.scaled(f->q() * qm1) - one.scaled(qm1));

    // sigma^N = 1
    REQUIRE(reduce(f, SmashWord::sigma() * SmashWord::sigma() * SmashWord::sigma()) == one);

    // delta^(N) survives as d_1, with no group-algebra part
    ScriptHElem d1 = reduce(f, SmashWord::delta(3));
    REQUIRE(d1 == ScriptHElem::d(f, 1));
}

TEST_CASE("generator relations") {
    auto f = Field::make(0, 3);
    ScriptHElem one = ScriptHElem::one(f);
    ScriptHElem sg = ScriptHElem::sigma(f);
    ScriptHElem xi = reduce(f, SmashWord::delta(1)) - (sg - one).scaled(RatFunc::u(f));

    REQUIRE(xi.is_zero());

    ScriptHElem dl = ScriptHElem::delta_image(f, 1);
    REQUIRE(dl * sg == (sg * dl).scaled(f->q()));

    ScriptHElem d1 = ScriptHElem::d(f, 1);
    REQUIRE(d1 * sg == sg * d1);

    // d_m d_n = binom(m+n, m) d_{m+n}
    for (unsigned long m = 0; m <= 3; ++m)
        for (unsigned long n = 0; m + n <= 3; ++n)
            REQUIRE(ScriptHElem::d(f, m) * ScriptHElem::d(f, n) ==
                    ScriptHElem::d(f, m + n).scaled(f->binom(m + n, m)));
}

TEST_CASE("action on K") {
    auto f = Field::make(0, 3);
    RatFunc t = RatFunc::t(f);

    // sigma acts as the substitution t -> qt
    REQUIRE(ScriptHElem::sigma(f).act(t * t) == t * t * f->q_pow(2));

    // the image of delta^(k) acts as delta^(k)
    RatFunc x = (t + RatFunc::constant(f->one())) * t.inv();
    for (unsigned long k = 1; k <= 4; ++k)
        REQUIRE(ScriptHElem::delta_image(f, k).act(x) == delta_ratfunc(k, x));

    // d_n sends t^{nN} to 1
    for (unsigned long n = 0; n <= 3; ++n) {
        RatFunc v = ScriptHElem::d(f, n).act(RatFunc(Poly::monomial(f, 3 * n, f->one())));
        REQUIRE(v == RatFunc::constant(f->one()));
    }

    // products act by composition
    ScriptHElem a = ScriptHElem::d(f, 1) * ScriptHElem::sigma(f);
    REQUIRE(a.act(x) == ScriptHElem::d(f, 1).act(ScriptHElem::sigma(f).act(x)));
}

TEST_CASE("coproduct basics") {
    auto f = Field::make(0, 2);
    // Delta(sigma) = sigma (x) sigma
    ScriptHTensor ds = script_coproduct(ScriptHElem::sigma(f));
    REQUIRE(ds.terms().size() == 1);
    REQUIRE(ds.terms().begin()->first ==
            ScriptHTensor::Key{{1, 0}, {1, 0}});

    // Delta(d_1) is cocommutative and satisfies both counit axioms
    ScriptHTensor dd = script_coproduct(ScriptHElem::d(f, 1));
    REQUIRE(dd == dd.twisted());
    ScriptHElem left(f);
    for (const auto& [k, x] : dd.terms())
        if (k.first.second == 0) left.add_term(k.second.first, k.second.second, x);
    REQUIRE(left == ScriptHElem::d(f, 1));

    // and its image lies in the centralizer of the two right K-structures
    RatFunc t = RatFunc::t(f);
    REQUIRE(dd.mul_first(t) == dd.mul_second(t));
    REQUIRE(dd.mul_first(t.inv()) == dd.mul_second(t.inv()));
}

TEST_CASE("structure suites pass") {
    for (unsigned long N : {2ul, 3ul}) {
        auto f = Field::make(0, N);
        CAPTURE(N);
        Report rep = verify_hscript(f, 3, 5);
        for (const auto& r : rep.results) {
            CAPTURE(r.identity, r.witness);
            CHECK(r.pass);
        }
        REQUIRE(rep.all_pass());

        Report coc = check_cocommutative(f, 2);
        for (const auto& r : coc.results) {
            CAPTURE(r.identity, r.witness);
            CHECK(r.pass);
        }
        REQUIRE(coc.all_pass());

        REQUIRE(separation_check(f, 2, 3 * N).all_pass());
    }
}

TEST_CASE("structure suites pass in characteristic 5") {
    auto f = Field::make(5, 3);
    Report rep = verify_hscript(f, 3, 5);
    for (const auto& r : rep.results) {
        CAPTURE(r.identity, r.witness);
        CHECK(r.pass);
    }
    REQUIRE(rep.all_pass());
    REQUIRE(check_cocommutative(f, 2).all_pass());
    REQUIRE(separation_check(f, 2, 9).all_pass());
}
