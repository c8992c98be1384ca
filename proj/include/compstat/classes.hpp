#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <utility>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "compstat/marker_poly.hpp"

namespace compstat {

enum class CompositionClass { Compositions, Palindromes, Carlitz, CarlitzPalindromes, Partitions };

inline constexpr std::array<CompositionClass, 5> kAllClasses = {
    CompositionClass::Compositions, CompositionClass::Palindromes, CompositionClass::Carlitz,
    CompositionClass::CarlitzPalindromes, CompositionClass::Partitions};

enum class Statistic { Rises, Levels, Drops, Parts };

/// "compositions", "palindromes", "carlitz", "carlitz-palindromes", "partitions".
std::string_view class_name(CompositionClass c);
std::optional<CompositionClass> parse_class(std::string_view name);

std::string_view statistic_name(Statistic s);
std::optional<Statistic> parse_statistic(std::string_view name);

/// The marker whose exponent records the statistic.
Marker marker_of(Statistic s);

/// Optional integer value per marker.
class Substitution {
public:
    Substitution() = default;
    Substitution(std::initializer_list<std::pair<Marker, long long>> values);

    void set(Marker m, long long value) { values_[index(m)] = value; }
    void clear(Marker m) { values_[index(m)].reset(); }
    const std::optional<long long>& get(Marker m) const { return values_[index(m)]; }
    bool fixes(Marker m) const { return values_[index(m)].has_value(); }
    bool empty() const;

    /// Entries of `other` override entries of this.
    Substitution merged(const Substitution& other) const;

    /// e.g. "y=1,l=0"; empty string when nothing is fixed.
    std::string to_string() const;

    friend bool operator==(const Substitution&, const Substitution&) = default;

private:
    static std::size_t index(Marker m) { return static_cast<std::size_t>(m); }
    std::array<std::optional<long long>, 4> values_{};
};

/// Values of the four statistics of one composition.
struct StatKey {
    int parts = 0;
    int rises = 0;
    int levels = 0;
    int drops = 0;

    friend auto operator<=>(const StatKey&, const StatKey&) = default;
};

/// Tally (parts, rises, levels, drops) -> number of objects of size n.
struct JointDistribution {
    int n = 0;
    std::map<StatKey, std::uint64_t> counts;

    std::uint64_t total() const;
    friend bool operator==(const JointDistribution&, const JointDistribution&) = default;
};

}  // namespace compstat
