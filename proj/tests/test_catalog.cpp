#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "compstat/catalog.hpp"
#include "compstat/engine.hpp"
#include "support.hpp"

using namespace compstat;
using namespace testutil;

namespace {

const IntPoly kOneMinusX{1, -1};
const IntPoly kOnePlusX{1, 1};

}  // namespace

TEST_CASE("expand") {
    RationalGF rises(IntPoly::x_pow(3), kOnePlusX * IntPoly{1, -2}.pow(2));
    CHECK(rises.expand(6) == ints({0, 0, 0, 1, 3, 9, 23}));
    CHECK(RationalGF(kOnePlusX, IntPoly{1, 0, -2}).expand(6) == ints({1, 1, 2, 2, 4, 4, 8}));
    CHECK(RationalGF(1, kOneMinusX).expand(3) == ints({1, 1, 1, 1}));
    CHECK(RationalGF(1, IntPoly{-1, 1}).expand(3) == ints({-1, -1, -1, -1}));
    CHECK(expand(RationalGF(1, kOneMinusX), 2) == series(2, {{0, 1}, {1, 1}, {2, 1}}));
}

TEST_CASE("expand rejects non-unit denominators") {
    CHECK_THROWS_AS(RationalGF(1, IntPoly{2, 1}).expand(4), std::domain_error);
    CHECK_THROWS_AS(RationalGF(1, IntPoly(0)), std::domain_error);
}

TEST_CASE("rational arithmetic cancels powers of x") {
    auto a = RationalGF(IntPoly::x_pow(3), IntPoly::x_pow(1) * kOneMinusX);
    CHECK(a.numerator() == IntPoly::x_pow(2));
    CHECK(a.expand(5) == ints({0, 0, 1, 1, 1, 1}));
    auto b = RationalGF(1, kOneMinusX) - RationalGF(1, kOnePlusX);  // 2x/(1-x^2)
    CHECK(b.expand(6) == ints({0, 2, 0, 2, 0, 2, 0}));
    CHECK((RationalGF(1, kOneMinusX) * RationalGF(kOneMinusX)).expand(3) == ints({1, 0, 0, 0}));
    CHECK((RationalGF(1) / RationalGF(kOneMinusX)).expand(2) == ints({1, 1, 1}));
}

TEST_CASE("fibonacci convolution") {
    auto fib3 = RationalGF(IntPoly::x_pow(6, 2), IntPoly{1, -1, -1}.pow(3));
    auto engine = moment_total(CompositionClass::Compositions, PartSet::parse("1,2"), Statistic::Drops, 20);
    CHECK(scalar_coefficients(engine) == fib3.expand(20));
}

TEST_CASE("exact_div") {
    CHECK(exact_div(27, 9) == 3);
    CHECK(exact_div(-18, 9) == -2);
    CHECK_THROWS_AS(exact_div(10, 9), std::domain_error);
}

TEST_CASE("integrality of the rise closed form") {
    for (int n = 3; n <= 60; ++n) {
        BigInt v = (BigInt(1) << (n - 2)) * (3 * n - 5) + (n % 2 ? 1 : -1);
        CHECK(v % 9 == 0);
    }
}

TEST_CASE("catalog structure") {
    const auto& all = catalog();
    CHECK(all.size() >= 60);
    std::set<std::string> ids;
    for (const auto& e : all) {
        CAPTURE(e.id);
        CHECK(ids.insert(e.id).second);
        CHECK(!e.anchor.empty());
        CHECK(!e.instances.empty());
        CHECK(e.suspect == !e.rationale.empty());
        for (const auto& inst : e.instances) CHECK(bool(inst.rational) != inst.formula.has_value());
        CHECK(find_entry(e.id) == &e);
    }
    CHECK(find_entry("no.such.entry") == nullptr);
    CHECK(find_entry("compositions.rises.odd")->suspect);
    CHECK(find_entry("palindromes.levels.1k")->suspect);
}

TEST_CASE("every entry verdict agrees with its flag") {
    for (const auto& e : catalog()) {
        CAPTURE(e.id);
        Verdict v = verify_entry(e, 20);
        CHECK(v.match != e.suspect);
        if (!v.match) CHECK(v.first_mismatch >= 0);
    }
}

TEST_CASE("suspect verdicts") {
    struct Expect {
        const char* id;
        const char* instance;
        int degree;
        long long engine;
        long long claimed;
    };
    for (Expect x : {Expect{"compositions.rises.odd", "k=2", 3, 0, 1},
                     Expect{"palindromes.levels.1k", "k=2", 3, 2, 1},
                     Expect{"compositions.levels.1k", "k=2", 3, 2, 0}}) {
        CAPTURE(x.id);
        Verdict v = verify_entry(*find_entry(x.id), 20);
        CHECK_FALSE(v.match);
        CHECK(v.instance == x.instance);
        CHECK(v.first_mismatch == x.degree);
        CHECK(v.expected == x.engine);
        CHECK(v.observed == x.claimed);
    }
}

TEST_CASE("engine series behind selected entries") {
    CatalogQuery odd_rises{CompositionClass::Compositions, PartSet::odds(), Quantity::Total, Statistic::Rises};
    CHECK(scalar_coefficients(engine_series(odd_rises, 14)) ==
          ints({0, 0, 0, 0, 1, 2, 4, 8, 16, 30, 55, 100, 180, 320, 564}));

    CatalogQuery pal_levels{CompositionClass::Palindromes, PartSet::parse("1,2"), Quantity::Total,
                            Statistic::Levels};
    CHECK(scalar_coefficients(engine_series(pal_levels, 14)) ==
          ints({0, 0, 1, 2, 4, 4, 11, 8, 23, 18, 48, 34, 93, 66, 177}));

    CatalogQuery carlitz{CompositionClass::Carlitz, PartSet::naturals(), Quantity::Count};
    CHECK(scalar_coefficients(engine_series(carlitz, 14)) ==
          ints({1, 1, 1, 3, 4, 7, 14, 23, 39, 71, 124, 214, 378, 661, 1152}));

    CatalogQuery slice{CompositionClass::Compositions, PartSet::naturals(), Quantity::Total, Statistic::Rises, 2};
    CHECK(scalar_coefficients(engine_series(slice, 7)) == ints({0, 0, 0, 1, 1, 2, 2, 3}));
}

TEST_CASE("count formulas are compared from n_min on") {
    CatalogInstance inst;
    inst.query = {CompositionClass::Compositions, PartSet::naturals(), Quantity::Count};
    inst.formula = CountFormula{1, [](int n) -> BigInt { return BigInt(1) << (n - 1); }};
    auto engine = engine_series(inst.query, 12);
    CHECK(verify_instance(inst, engine, 12).match);

    inst.formula = CountFormula{1, [](int n) -> BigInt { return n == 7 ? BigInt(0) : BigInt(1) << (n - 1); }};
    Verdict v = verify_instance(inst, engine, 12);
    CHECK_FALSE(v.match);
    CHECK(v.first_mismatch == 7);
    CHECK(v.expected == 64);
    CHECK(v.observed == 0);
}

TEST_CASE("identity entry matches itself") {
    CatalogInstance inst;
    inst.rational = [](int) { return RationalGF(1, kOneMinusX); };
    CHECK(verify_instance(inst, expand(RationalGF(1, kOneMinusX), 10), 10).match);
}
