#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "compstat/engine.hpp"
#include "support.hpp"

using namespace compstat;
using namespace testutil;

TEST_CASE("MarkerPoly canonical form") {
    MarkerPoly p = term(3, 1) + term(-3, 1);
    CHECK(p.is_zero());
    CHECK(p == MarkerPoly());

    auto q = MarkerPoly::from_terms({{Monomial(1, 0, 0, 0), 2}, {Monomial(), 0}, {Monomial(1, 0, 0, 0), 5}});
    REQUIRE(q.size() == 1);
    CHECK(q.coefficient(Monomial(1, 0, 0, 0)) == 7);
    CHECK(q.constant_term() == 0);
}

TEST_CASE("MarkerPoly printing") {
    CHECK(MarkerPoly().to_string() == "0");
    CHECK((term(2, 2, 1) - term(1, 0, 0, 0, 1)).to_string() == "-d + 2*y^2*r");
}

TEST_CASE("add") {
    auto a = series(2, {{0, 1}, {1, 1}});
    auto b = series(2, {{0, 1}, {1, -1}});
    CHECK(a + b == series(2, {{0, 2}}));
    CHECK(a + TruncatedSeries::zero(2) == a);
    CHECK(series(2, {{1, term(1, 1)}}) + series(2, {{1, term(1, 0, 1)}}) ==
          series(2, {{1, term(1, 1) + term(1, 0, 1)}}));
}

TEST_CASE("mul") {
    CHECK(series(2, {{0, 1}, {1, 1}}) * series(2, {{0, 1}, {1, -1}}) == series(2, {{0, 1}, {2, -1}}));
    CHECK(series(3, {{1, term(1, 1)}}) * series(3, {{1, term(1, 1, 0, 1)}}) ==
          series(3, {{2, term(1, 2, 0, 1)}}));
    auto s = series(2, {{0, 1}, {1, 1}, {2, 1}});
    CHECK(s * TruncatedSeries::one(2) == s);
}

TEST_CASE("mixed orders are rejected") {
    CHECK_THROWS_AS(TruncatedSeries(2) + TruncatedSeries(3), ContractError);
    CHECK_THROWS_AS(TruncatedSeries(2) * TruncatedSeries(3), ContractError);
}

TEST_CASE("products never exceed the order") {
    auto s = series(3, {{2, 1}, {3, 1}});
    auto p = s * s;
    CHECK(p.coeffs().size() == 4);
    CHECK(p.is_zero());
}

TEST_CASE("recip") {
    auto one_minus_xy = series(3, {{0, 1}, {1, term(-1, 1)}});
    CHECK(one_minus_xy.recip() ==
          series(3, {{0, 1}, {1, term(1, 1)}, {2, term(1, 2)}, {3, term(1, 3)}}));
    CHECK(TruncatedSeries::one(4).recip() == TruncatedSeries::one(4));

    // 1 - x^2 y^2 (l^2 - d r)
    auto a = series(6, {{0, 1}, {2, term(-1, 2, 0, 2) + term(1, 2, 1, 0, 1)}});
    CHECK(a * a.recip() == TruncatedSeries::one(6));

    CHECK_THROWS_AS(series(3, {{0, 2}}).recip(), NotInvertibleError);
    CHECK_THROWS_AS(series(3, {{0, term(1, 1)}}).recip(), NotInvertibleError);
}

TEST_CASE("diff_marker") {
    CHECK(series(2, {{1, term(1, 2, 1)}}).diff_marker(Marker::Rises) == series(2, {{1, term(1, 2)}}));
    CHECK(series(1, {{0, term(1, 0, 0, 0, 2)}}).diff_marker(Marker::Drops).diff_marker(Marker::Drops) ==
          series(1, {{0, 2}}));
    CHECK(series(3, {{0, 5}}).diff_marker(Marker::Levels).is_zero());
}

TEST_CASE("eval_marker") {
    auto s = series(1, {{1, term(1, 1, 0, 1) + term(1, 1)}});
    CHECK(s.eval_marker(Marker::Levels, 0) == series(1, {{1, term(1, 1)}}));
    CHECK(series(2, {{2, term(1, 2, 0, 1)}}).eval_marker(Marker::Levels, 1) == series(2, {{2, term(1, 2)}}));

    auto c = series(3, {{3, term(1, 3, 0, 2) + term(1, 2, 1) + term(1, 2, 0, 0, 1)}});
    auto at1 = c.eval_marker(Marker::Rises, 1).eval_marker(Marker::Levels, 1).eval_marker(Marker::Drops, 1);
    CHECK(at1 == series(3, {{3, term(1, 3) + term(2, 2)}}));
}

TEST_CASE("coeff") {
    CHECK(coeff(series(1, {{0, 1}, {1, 2}}), 1) == MarkerPoly(2));
    Substitution ones{{Marker::Parts, 1}, {Marker::Rises, 1}, {Marker::Levels, 1}, {Marker::Drops, 1}};
    CHECK(coeff(comp_gf(PartSet::naturals(), 10, ones), 5) == MarkerPoly(16));
    CHECK(coeff(pal_gf(PartSet::parse("2,3"), 6), 0) == MarkerPoly(1));
    CHECK_THROWS_AS((void)coeff(TruncatedSeries(3), 4), std::out_of_range);
    CHECK_THROWS_AS((void)coeff(TruncatedSeries(3), -1), std::out_of_range);
}

TEST_CASE("printing") {
    CHECK(series(2, {{0, 1}, {2, term(-3, 1, 0, 0, 1)}}).to_string() == "1 - 3*x^2*y*d");
    CHECK(TruncatedSeries(3).to_string() == "0");
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int order = trial % 9;
        auto a = random_series(rng, order);
        auto b = random_series(rng, order);
        auto c = random_series(rng, order);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == TruncatedSeries::zero(order));
    }
}

TEST_CASE("recip of random unit series") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int order = trial % 9;
        auto a = random_series(rng, order, true);
        CHECK(a * a.recip() == TruncatedSeries::one(order));
    }
}

TEST_CASE("diff_marker is linear and obeys the product rule") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_series(rng, 6);
        auto b = random_series(rng, 6);
        for (Marker m : kAllMarkers) {
            CHECK((a + b).diff_marker(m) == a.diff_marker(m) + b.diff_marker(m));
            CHECK((a * b).diff_marker(m) == a.diff_marker(m) * b + a * b.diff_marker(m));
        }
    }
}

TEST_CASE("eval_marker is a ring homomorphism") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_series(rng, 5);
        auto b = random_series(rng, 5);
        for (Marker m : kAllMarkers) {
            BigInt v(trial % 3 - 1);
            CHECK((a * b).eval_marker(m, v) == a.eval_marker(m, v) * b.eval_marker(m, v));
        }
    }
}

TEST_CASE("truncated") {
    auto s = series(4, {{0, 1}, {3, 2}, {4, 5}});
    CHECK(s.truncated(3) == series(3, {{0, 1}, {3, 2}}));
    CHECK_THROWS((void)s.truncated(5));
}
