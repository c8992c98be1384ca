#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "compstat/oracle.hpp"

using namespace compstat;
using oracle::Composition;

namespace {

PartSet set(const char* spec) { return PartSet::parse(spec); }

StatKey key(int m, int r, int l, int d) { return {m, r, l, d}; }

std::set<Composition> as_set(const std::vector<Composition>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("statistics") {
    std::vector<int> a{1, 2, 1}, b{2, 2, 2}, c{1, 1, 2};
    CHECK(oracle::statistics(a) == key(3, 1, 0, 1));
    CHECK(oracle::statistics(b) == key(3, 0, 2, 0));
    CHECK(oracle::statistics(c) == key(3, 1, 1, 0));
    CHECK(oracle::statistics(std::vector<int>{}) == key(0, 0, 0, 0));
}

TEST_CASE("enumerate") {
    using V = std::vector<Composition>;
    CHECK(oracle::enumerate_all(CompositionClass::Compositions, PartSet::naturals(), 3) ==
          V{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
    CHECK(oracle::enumerate_all(CompositionClass::Palindromes, PartSet::naturals(), 4) ==
          V{{1, 1, 1, 1}, {1, 2, 1}, {2, 2}, {4}});
    CHECK(oracle::enumerate_all(CompositionClass::Carlitz, set("2,3"), 5) == V{{2, 3}, {3, 2}});
    for (auto cls : kAllClasses) CHECK(oracle::enumerate_all(cls, set("1,2"), 0) == V{{}});
}

TEST_CASE("enumeration is lexicographic and membership-consistent") {
    for (auto cls : kAllClasses) {
        for (int n = 1; n <= 12; ++n) {
            auto v = oracle::enumerate_all(cls, set("1,2,4"), n);
            CHECK(std::is_sorted(v.begin(), v.end()));
            CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
            for (const auto& c : v) {
                CHECK(oracle::belongs(cls, c));
                int sum = 0;
                for (int p : c) sum += p;
                CHECK(sum == n);
            }
        }
    }
}

TEST_CASE("direct enumeration matches the filtered path") {
    for (auto cls : kAllClasses) {
        for (const char* spec : {"N", "1,2", "2,3", "odd", "N\\{1}"}) {
            auto a = set(spec);
            for (int n = 0; n <= 14; ++n) {
                auto alphabet = a.materialize(n);
                std::vector<Composition> direct, filtered;
                oracle::enumerate(cls, alphabet, n,
                                  [&](std::span<const int> p) { direct.emplace_back(p.begin(), p.end()); });
                oracle::enumerate_filtered(cls, alphabet, n, [&](std::span<const int> p) {
                    filtered.emplace_back(p.begin(), p.end());
                });
                CAPTURE(class_name(cls));
                CAPTURE(spec);
                CAPTURE(n);
                CHECK(direct == filtered);
            }
        }
    }
}

TEST_CASE("joint_distribution") {
    auto d = oracle::joint_distribution(CompositionClass::Compositions, set("1,2"), 3);
    CHECK(d.counts == std::map<StatKey, std::uint64_t>{{key(3, 0, 2, 0), 1}, {key(2, 1, 0, 0), 1},
                                                       {key(2, 0, 0, 1), 1}});
    for (int n = 1; n <= 6; ++n) {
        auto one = oracle::joint_distribution(CompositionClass::Compositions, set("1"), n);
        CHECK(one.counts == std::map<StatKey, std::uint64_t>{{key(n, 0, n - 1, 0), 1}});
    }
    auto p = oracle::joint_distribution(CompositionClass::Partitions, set("1,2"), 5);
    CHECK(p.counts == std::map<StatKey, std::uint64_t>{{key(3, 0, 1, 1), 1}, {key(4, 0, 2, 1), 1},
                                                       {key(5, 0, 4, 0), 1}});
}

TEST_CASE("reversal swaps rises and drops") {
    for (int n = 1; n <= 12; ++n) {
        auto d = oracle::joint_distribution(CompositionClass::Compositions, set("1,2,3,5"), n);
        for (const auto& [k, c] : d.counts) {
            auto it = d.counts.find(key(k.parts, k.drops, k.levels, k.rises));
            REQUIRE(it != d.counts.end());
            CHECK(it->second == c);
            CHECK(k.rises + k.levels + k.drops == k.parts - 1);
        }
    }
}

TEST_CASE("Carlitz palindromes are exactly Carlitz and palindromic") {
    for (int n = 0; n <= 14; ++n) {
        auto cp = as_set(oracle::enumerate_all(CompositionClass::CarlitzPalindromes, PartSet::naturals(), n));
        auto c = as_set(oracle::enumerate_all(CompositionClass::Carlitz, PartSet::naturals(), n));
        auto p = as_set(oracle::enumerate_all(CompositionClass::Palindromes, PartSet::naturals(), n));
        std::set<Composition> both;
        std::set_intersection(c.begin(), c.end(), p.begin(), p.end(), std::inserter(both, both.end()));
        CHECK(cp == both);
    }
}

TEST_CASE("composition counts") {
    for (int n = 1; n <= 16; ++n) {
        auto d = oracle::joint_distribution(CompositionClass::Compositions, PartSet::naturals(), n);
        CHECK(d.total() == (std::uint64_t{1} << (n - 1)));
    }
    std::uint64_t pal = 0;
    oracle::enumerate(CompositionClass::Palindromes, PartSet::naturals(), 24, [&](std::span<const int>) { ++pal; });
    CHECK(pal == 4096);
}
