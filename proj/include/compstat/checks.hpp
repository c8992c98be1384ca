#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "compstat/part_set.hpp"

namespace compstat {

/// One expectation and what was observed.
struct CheckItem {
    std::string suite;
    std::string name;
    bool ok = true;
    std::string expected;
    std::string observed;
    std::string detail;
};

struct CheckReport {
    std::string suite;
    int n_max = 0;
    std::vector<CheckItem> items;

    bool ok() const;
    std::size_t failures() const;
};

/// The sets every class is exercised on.
const std::vector<PartSet>& roster_sets();

/// "oracle", "catalog", "identities", "paths".
const std::vector<std::string>& suite_names();

/// Engine joint coefficients against brute-force enumeration for n <= n_max.
CheckReport check_oracle(int n_max);
/// Every catalog entry at order n_max; suspect entries are expected to mismatch.
CheckReport check_catalog(int n_max);
/// Structural identities of the generating functions.
CheckReport check_identities(int n_max);
/// Closed-form composition GF against the linear-system solution.
CheckReport check_paths(int n_max);

/// Dispatch by name; throws std::invalid_argument for an unknown suite.
CheckReport run_suite(std::string_view suite, int n_max);

// Individual identity checks, exposed for tests. Each returns one item per
// (class, set) or per trial.
std::vector<CheckItem> rises_equal_drops(int order);
std::vector<CheckItem> palindrome_symmetry(int order);
std::vector<CheckItem> adjacency_identity(int order);
std::vector<CheckItem> telescoping_identity(int trials, int order, unsigned seed);
std::vector<CheckItem> truncation_independence(int order, int extra);

}  // namespace compstat
