#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace compstat {

/// Malformed set spec; position() is the 0-based character offset of the problem.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// The part alphabet A, possibly infinite.
///
/// Spec grammar: `N` | `odd` | `N\{k}` | `a,b,c,...` | `a..b`.
class PartSet {
public:
    enum class Kind { Explicit, AllNaturals, NaturalsWithout, Odds };

    static PartSet naturals();
    static PartSet odds();
    static PartSet naturals_without(int k);
    /// Sorts and deduplicates; every part must be >= 1 and the list nonempty.
    static PartSet explicit_set(std::vector<int> parts);
    static PartSet parse(std::string_view spec);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Explicit; }
    /// Explicit members (Explicit kind only).
    const std::vector<int>& members() const { return members_; }
    /// The excluded part (NaturalsWithout kind only).
    int excluded() const { return excluded_; }

    bool contains(int part) const;
    /// {a in A : a <= n}, ascending.
    std::vector<int> materialize(int n) const;

    /// Canonical spec text, e.g. "N", "odd", "N\{2}", "1,2".
    std::string spec() const;

    friend bool operator==(const PartSet&, const PartSet&) = default;

private:
    PartSet(Kind kind, std::vector<int> members, int excluded)
        : kind_(kind), members_(std::move(members)), excluded_(excluded) {}

    Kind kind_;
    std::vector<int> members_;
    int excluded_ = 0;
};

std::vector<int> materialize(const PartSet& a, int n);
PartSet parse_set(std::string_view spec);

}  // namespace compstat
