#include "compstat/checks.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "compstat/catalog.hpp"
#include "compstat/engine.hpp"
#include "compstat/oracle.hpp"

namespace compstat {

bool CheckReport::ok() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const CheckItem& i) { return !i.ok; }));
}

const std::vector<PartSet>& roster_sets() {
    static const std::vector<PartSet> sets = {
        PartSet::naturals(),
        PartSet::explicit_set({1, 2}),
        PartSet::explicit_set({1, 3}),
        PartSet::explicit_set({2, 3}),
        PartSet::explicit_set({2, 5}),
        PartSet::naturals_without(1),
        PartSet::naturals_without(2),
        PartSet::odds(),
    };
    return sets;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"oracle", "catalog", "identities", "paths"};
    return names;
}

namespace {

using CC = CompositionClass;

std::string label(CC cls, const PartSet& a) { return std::string(class_name(cls)) + " A=" + a.spec(); }

std::string key_text(const StatKey& k) {
    return "(m=" + std::to_string(k.parts) + ",r=" + std::to_string(k.rises) + ",l=" + std::to_string(k.levels) +
           ",d=" + std::to_string(k.drops) + ")";
}

// Runs the jobs concurrently and returns their items in job order.
std::vector<CheckItem> run_parallel(const std::vector<std::function<CheckItem()>>& jobs) {
    std::vector<std::future<CheckItem>> futures;
    futures.reserve(jobs.size());
    for (const auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
    std::vector<CheckItem> out;
    out.reserve(jobs.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

// Wraps a check body so that an exception becomes a failed item.
CheckItem guarded(std::string suite, std::string name, std::string expected,
                  const std::function<void(CheckItem&)>& body) {
    CheckItem item{std::move(suite), std::move(name), true, std::move(expected), "as expected", {}};
    try {
        body(item);
    } catch (const std::exception& e) {
        item.ok = false;
        item.observed = "exception";
        item.detail = e.what();
    }
    return item;
}

void fail(CheckItem& item, std::string observed) {
    item.ok = false;
    item.observed = std::move(observed);
}

std::vector<CheckItem> collect(const std::vector<std::function<CheckItem()>>& jobs) { return run_parallel(jobs); }

// ---- oracle -------------------------------------------------------------------

CheckItem oracle_item(CC cls, const PartSet& a, int n_max) {
    return guarded("oracle", label(cls, a), "engine joint distribution equals enumeration for n <= " +
                                                std::to_string(n_max),
                   [&](CheckItem& item) {
                       const TruncatedSeries gf = joint_gf(cls, a, n_max);
                       for (int n = 0; n <= n_max; ++n) {
                           const JointDistribution engine = joint_from_series(gf, n);
                           const JointDistribution truth = oracle::joint_distribution(cls, a, n);
                           if (engine == truth) continue;
                           std::set<StatKey> keys;
                           for (const auto& [k, _] : engine.counts) keys.insert(k);
                           for (const auto& [k, _] : truth.counts) keys.insert(k);
                           for (const StatKey& k : keys) {
                               const auto e = engine.counts.contains(k) ? engine.counts.at(k) : 0;
                               const auto t = truth.counts.contains(k) ? truth.counts.at(k) : 0;
                               if (e != t) {
                                   fail(item, "n=" + std::to_string(n) + " key " + key_text(k) + ": engine " +
                                                  std::to_string(e) + ", oracle " + std::to_string(t));
                                   return;
                               }
                           }
                       }
                   });
}

// The d = 1 specialisation tracks (parts, rises) only.
CheckItem carlitz_pal_projection_item(const PartSet& a, int n_max) {
    return guarded("oracle", "carlitz-palindromes projected A=" + a.spec(),
                   "(parts, rises) marginal equals enumeration for n <= " + std::to_string(n_max),
                   [&](CheckItem& item) {
                       const TruncatedSeries gf = carlitz_pal_gf(a, n_max);
                       for (int n = 0; n <= n_max; ++n) {
                           std::map<std::pair<int, int>, BigInt> engine, truth;
                           for (const auto& [mono, c] : gf.coeff(n).terms())
                               engine[{static_cast<int>(mono.exponent(Marker::Parts)),
                                       static_cast<int>(mono.exponent(Marker::Rises))}] += c;
                           const JointDistribution dist = oracle::joint_distribution(CC::CarlitzPalindromes, a, n);
                           for (const auto& [k, c] : dist.counts) truth[{k.parts, k.rises}] += c;
                           if (engine != truth) {
                               fail(item, "n=" + std::to_string(n) + " marginal differs");
                               return;
                           }
                       }
                   });
}

// ---- identities ---------------------------------------------------------------

const std::vector<PartSet>& infinite_sets() {
    static const std::vector<PartSet> sets = {PartSet::naturals(), PartSet::naturals_without(1),
                                              PartSet::naturals_without(2), PartSet::naturals_without(3),
                                              PartSet::odds()};
    return sets;
}

TruncatedSeries sum_of_parts(const PartSet& a, int order, int scale, const MarkerPoly& c) {
    TruncatedSeries s = TruncatedSeries::zero(order);
    for (int part : a.materialize(order)) s += TruncatedSeries::monomial(order, scale * part, c);
    return s;
}

std::vector<CheckItem> projection_checks(int order) {
    std::vector<std::function<CheckItem()>> jobs;
    for (const PartSet& a : roster_sets()) {
        jobs.emplace_back([a, order] {
            return guarded("identities", "carlitz is the l^0 part of compositions A=" + a.spec(), "equal",
                           [&](CheckItem& item) {
                               if (comp_gf(a, order).eval_marker(Marker::Levels, 0) != carlitz_gf(a, order))
                                   fail(item, "differs");
                           });
        });
        jobs.emplace_back([a, order] {
            return guarded("identities", "partitions are the r^0 part of compositions A=" + a.spec(), "equal",
                           [&](CheckItem& item) {
                               if (comp_gf(a, order).eval_marker(Marker::Rises, 0) != partition_gf(a, order))
                                   fail(item, "differs");
                           });
        });
        jobs.emplace_back([a, order] {
            return guarded("identities", "carlitz palindromes are the l^0 part of palindromes A=" + a.spec(),
                           "equal", [&](CheckItem& item) {
                               const TruncatedSeries joint = pal_gf(a, order).eval_marker(Marker::Levels, 0);
                               if (joint != joint_gf(CC::CarlitzPalindromes, a, order) ||
                                   joint.eval_marker(Marker::Drops, 1) != carlitz_pal_gf(a, order))
                                   fail(item, "differs");
                           });
        });
    }
    return collect(jobs);
}

std::vector<CheckItem> marker_sum_checks(int order) {
    std::vector<CheckItem> out;
    const MarkerPoly y = MarkerPoly::marker(Marker::Parts);
    const Substitution ones{{Marker::Rises, 1}, {Marker::Levels, 1}, {Marker::Drops, 1}};
    for (const PartSet& a : roster_sets()) {
        out.push_back(guarded("identities", "compositions by parts A=" + a.spec(), "1/(1 - y sum x^a)",
                              [&](CheckItem& item) {
                                  const TruncatedSeries expected =
                                      (TruncatedSeries::one(order) - sum_of_parts(a, order, 1, y)).recip();
                                  if (comp_gf(a, order, ones) != expected) fail(item, "differs");
                              }));
        out.push_back(guarded("identities", "palindromes by parts A=" + a.spec(),
                              "(1 + y sum x^a)/(1 - y^2 sum x^2a)", [&](CheckItem& item) {
                                  const TruncatedSeries expected =
                                      (TruncatedSeries::one(order) + sum_of_parts(a, order, 1, y)) *
                                      (TruncatedSeries::one(order) - sum_of_parts(a, order, 2, y * y)).recip();
                                  if (pal_gf(a, order, ones) != expected) fail(item, "differs");
                              }));
    }
    return out;
}

}  // namespace

std::vector<CheckItem> rises_equal_drops(int order) {
    std::vector<std::function<CheckItem()>> jobs;
    for (CC cls : {CC::Compositions, CC::Palindromes, CC::Carlitz, CC::CarlitzPalindromes})
        for (const PartSet& a : roster_sets())
            jobs.emplace_back([cls, a, order] {
                return guarded("identities", "rises = drops " + label(cls, a), "equal totals, parts kept",
                               [&](CheckItem& item) {
                                   const TruncatedSeries r = statistic_total(cls, a, Statistic::Rises, order, true);
                                   const TruncatedSeries d = statistic_total(cls, a, Statistic::Drops, order, true);
                                   if (r != d) {
                                       for (int n = 0; n <= order; ++n)
                                           if (r.coeff(n) != d.coeff(n)) {
                                               fail(item, "differ at n=" + std::to_string(n) + ": " +
                                                              r.coeff(n).to_string() + " vs " +
                                                              d.coeff(n).to_string());
                                               return;
                                           }
                                   }
                               });
            });
    return collect(jobs);
}

std::vector<CheckItem> palindrome_symmetry(int order) {
    std::vector<std::function<CheckItem()>> jobs;
    for (CC cls : {CC::Palindromes, CC::CarlitzPalindromes})
        for (const PartSet& a : roster_sets())
            jobs.emplace_back([cls, a, order] {
                return guarded("identities", "rise/drop symmetry " + label(cls, a),
                               "no term with r-exponent != d-exponent", [&](CheckItem& item) {
                                   const TruncatedSeries gf = joint_gf(cls, a, order);
                                   for (int n = 0; n <= order; ++n)
                                       for (const auto& [mono, c] : gf.coeff(n).terms())
                                           if (mono.exponent(Marker::Rises) != mono.exponent(Marker::Drops)) {
                                               fail(item, "n=" + std::to_string(n) + " term " +
                                                              MarkerPoly(mono, c).to_string());
                                               return;
                                           }
                               });
            });
    return collect(jobs);
}

std::vector<CheckItem> adjacency_identity(int order) {
    std::vector<std::function<CheckItem()>> jobs;
    for (CC cls : kAllClasses)
        for (const PartSet& a : roster_sets())
            jobs.emplace_back([cls, a, order] {
                return guarded("identities", "rises + levels + drops = parts - 1 " + label(cls, a),
                               "holds on every joint key", [&](CheckItem& item) {
                                   const TruncatedSeries gf = joint_gf(cls, a, order);
                                   for (int n = 0; n <= order; ++n)
                                       for (const auto& [mono, c] : gf.coeff(n).terms()) {
                                           const long m = mono.exponent(Marker::Parts);
                                           const long adj = static_cast<long>(mono.exponent(Marker::Rises)) +
                                                            mono.exponent(Marker::Levels) +
                                                            mono.exponent(Marker::Drops);
                                           const bool good = m == 0 ? (n == 0 && adj == 0) : adj == m - 1;
                                           if (!good) {
                                               fail(item, "n=" + std::to_string(n) + " term " +
                                                              MarkerPoly(mono, c).to_string());
                                               return;
                                           }
                                       }
                               });
            });
    return collect(jobs);
}

std::vector<CheckItem> telescoping_identity(int trials, int order, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> size_dist(1, 6);
    std::uniform_int_distribution<int> part_dist(1, order + 3);
    const MarkerPoly alpha = MarkerPoly::marker(Marker::Parts);
    std::vector<CheckItem> out;
    for (int t = 0; t < trials; ++t) {
        std::set<int> chosen;
        const int size = size_dist(rng);
        while (static_cast<int>(chosen.size()) < size) chosen.insert(part_dist(rng));
        const PartSet a = PartSet::explicit_set({chosen.begin(), chosen.end()});
        out.push_back(guarded("identities", "telescoping trial " + std::to_string(t) + " A=" + a.spec(),
                              "1 - alpha sum_j x^a_j prod_{i<j}(1 - x^a_i alpha) = prod_j (1 - x^a_j alpha)",
                              [&](CheckItem& item) {
                                  TruncatedSeries running = TruncatedSeries::one(order);
                                  TruncatedSeries sum = TruncatedSeries::zero(order);
                                  for (int part : a.members()) {
                                      const TruncatedSeries factor =
                                          TruncatedSeries::one(order) - TruncatedSeries::monomial(order, part, alpha);
                                      sum += TruncatedSeries::monomial(order, part, MarkerPoly(1)) * running;
                                      running *= factor;
                                  }
                                  const TruncatedSeries lhs = TruncatedSeries::one(order) - sum.scaled(alpha);
                                  if (lhs != running) fail(item, "sides differ");
                              }));
    }
    return out;
}

std::vector<CheckItem> truncation_independence(int order, int extra) {
    std::vector<std::function<CheckItem()>> jobs;
    for (CC cls : kAllClasses)
        for (const PartSet& a : infinite_sets())
            jobs.emplace_back([cls, a, order, extra] {
                return guarded("identities", "truncation independence " + label(cls, a),
                               "order " + std::to_string(order) + " equals order " + std::to_string(order + extra) +
                                   " truncated",
                               [&](CheckItem& item) {
                                   if (joint_gf(cls, a, order) != joint_gf(cls, a, order + extra).truncated(order))
                                       fail(item, "differs");
                               });
            });
    return collect(jobs);
}

CheckReport check_oracle(int n_max) {
    std::vector<std::function<CheckItem()>> jobs;
    for (CC cls : kAllClasses)
        for (const PartSet& a : roster_sets()) jobs.emplace_back([cls, a, n_max] { return oracle_item(cls, a, n_max); });
    for (const PartSet& a : roster_sets())
        jobs.emplace_back([a, n_max] { return carlitz_pal_projection_item(a, n_max); });
    return {"oracle", n_max, collect(jobs)};
}

CheckReport check_catalog(int n_max) {
    std::vector<std::function<CheckItem()>> jobs;
    for (const CatalogEntry& entry : catalog()) {
        jobs.emplace_back([&entry, n_max] {
            CheckItem item = guarded("catalog", entry.id, entry.suspect ? "mismatch (suspect)" : "match",
                                     [&](CheckItem& it) {
                                         const Verdict v = verify_entry(entry, n_max);
                                         if (v.match) {
                                             it.observed = "match";
                                         } else {
                                             it.observed = "mismatch at x^" + std::to_string(v.first_mismatch);
                                             if (!v.instance.empty()) it.observed += " [" + v.instance + "]";
                                             it.observed += ": engine " + v.expected.str() + ", catalog " +
                                                            v.observed.str();
                                         }
                                         it.ok = v.match != entry.suspect;
                                     });
            item.detail = entry.anchor;
            if (entry.suspect) item.detail += " | " + entry.rationale;
            return item;
        });
    }
    CheckReport report{"catalog", n_max, collect(jobs)};

    report.items.push_back(guarded("catalog", "compositions.rises.N.closed integrality",
                                   "integral for 3 <= n <= 60", [](CheckItem& item) {
                                       const CatalogEntry* e = find_entry("compositions.rises.N.closed");
                                       if (e == nullptr) throw std::logic_error("entry missing");
                                       for (int n = 3; n <= 60; ++n) e->instances.front().formula->value(n);
                                       item.observed = "integral";
                                   }));
    return report;
}

CheckReport check_identities(int n_max) {
    CheckReport report{"identities", n_max, {}};
    auto append = [&report](std::vector<CheckItem> items) {
        report.items.insert(report.items.end(), std::make_move_iterator(items.begin()),
                            std::make_move_iterator(items.end()));
    };
    append(rises_equal_drops(n_max));
    append(palindrome_symmetry(n_max));
    append(adjacency_identity(n_max));
    append(telescoping_identity(50, n_max, 20240611u));
    append(truncation_independence(n_max, 10));
    append(projection_checks(n_max));
    append(marker_sum_checks(n_max));
    return report;
}

CheckReport check_paths(int n_max) {
    std::vector<std::function<CheckItem()>> jobs;
    for (const PartSet& a : roster_sets())
        jobs.emplace_back([a, n_max] {
            return guarded("paths", "closed form = linear system A=" + a.spec(),
                           "identical series to order " + std::to_string(n_max), [&](CheckItem& item) {
                               const TruncatedSeries closed = comp_gf(a, n_max);
                               const TruncatedSeries system = comp_gf_via_system(a, n_max);
                               if (closed == system) return;
                               for (int n = 0; n <= n_max; ++n)
                                   if (closed.coeff(n) != system.coeff(n)) {
                                       fail(item, "first difference at n=" + std::to_string(n));
                                       return;
                                   }
                           });
        });
    return {"paths", n_max, collect(jobs)};
}

CheckReport run_suite(std::string_view suite, int n_max) {
    if (suite == "oracle") return check_oracle(n_max);
    if (suite == "catalog") return check_catalog(n_max);
    if (suite == "identities") return check_identities(n_max);
    if (suite == "paths") return check_paths(n_max);
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace compstat
