#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "compstat/part_set.hpp"

using compstat::ParseError;
using compstat::PartSet;

TEST_CASE("parse") {
    auto a = PartSet::parse("1,2");
    CHECK(a.kind() == PartSet::Kind::Explicit);
    CHECK(a.members() == std::vector<int>{1, 2});

    auto b = PartSet::parse("N\\{3}");
    CHECK(b.kind() == PartSet::Kind::NaturalsWithout);
    CHECK(b.excluded() == 3);

    CHECK(PartSet::parse("odd").kind() == PartSet::Kind::Odds);
    CHECK(PartSet::parse("N") == PartSet::naturals());
    CHECK(PartSet::parse("7,2,7,3").members() == std::vector<int>{2, 3, 7});
    CHECK(PartSet::parse("3..6").members() == std::vector<int>{3, 4, 5, 6});
}

TEST_CASE("canonical spec round-trips") {
    for (const char* s : {"N", "odd", "N\\{2}", "1,2", "2,3,7"}) {
        auto a = PartSet::parse(s);
        CHECK(a.spec() == s);
        CHECK(PartSet::parse(a.spec()) == a);
    }
    CHECK(PartSet::parse("5..7").spec() == "5,6,7");
}

TEST_CASE("malformed specs report a position") {
    struct Case {
        const char* spec;
        std::size_t pos;
    };
    for (Case c : {Case{"", 0}, Case{"1,,2", 2}, Case{"0", 0}, Case{"1,-2", 2}, Case{"N\\{0}", 3},
                   Case{"N\\{2", 4}, Case{"even", 0}, Case{"5..3", 3}, Case{"1, 2", 2}, Case{"1,2,", 4}}) {
        CAPTURE(c.spec);
        try {
            (void)PartSet::parse(c.spec);
            FAIL("no error");
        } catch (const ParseError& e) {
            CHECK(e.position() == c.pos);
        }
    }
}

TEST_CASE("materialize") {
    CHECK(PartSet::odds().materialize(8) == std::vector<int>{1, 3, 5, 7});
    CHECK(PartSet::naturals_without(2).materialize(5) == std::vector<int>{1, 3, 4, 5});
    CHECK(PartSet::explicit_set({1, 7}).materialize(5) == std::vector<int>{1});
    CHECK(PartSet::naturals().materialize(0).empty());
}

TEST_CASE("materialize is monotone and exact") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> part(1, 30), len(1, 6);
    std::vector<PartSet> sets = {PartSet::naturals(), PartSet::odds(), PartSet::naturals_without(1),
                                 PartSet::naturals_without(4)};
    for (int i = 0; i < 20; ++i) {
        std::vector<int> v;
        for (int k = len(rng); k > 0; --k) v.push_back(part(rng));
        sets.push_back(PartSet::explicit_set(v));
    }
    for (const auto& a : sets) {
        for (int n = 0; n <= 25; ++n) {
            auto small = a.materialize(n);
            auto big = a.materialize(n + 7);
            REQUIRE(small.size() <= big.size());
            CHECK(std::equal(small.begin(), small.end(), big.begin()));
            CHECK(std::is_sorted(small.begin(), small.end()));
            CHECK(std::adjacent_find(small.begin(), small.end()) == small.end());
            std::size_t expected = 0;
            for (int p = 1; p <= n; ++p) expected += a.contains(p);
            CHECK(small.size() == expected);
        }
    }
}

TEST_CASE("explicit_set validation") {
    CHECK_THROWS(PartSet::explicit_set({}));
    CHECK_THROWS(PartSet::explicit_set({0, 1}));
    CHECK_THROWS(PartSet::naturals_without(0));
}
