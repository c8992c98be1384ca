#include "compstat/classes.hpp"

namespace compstat {

std::string_view class_name(CompositionClass c) {
    switch (c) {
        case CompositionClass::Compositions: return "compositions";
        case CompositionClass::Palindromes: return "palindromes";
        case CompositionClass::Carlitz: return "carlitz";
        case CompositionClass::CarlitzPalindromes: return "carlitz-palindromes";
        case CompositionClass::Partitions: return "partitions";
    }
    return "?";
}

std::optional<CompositionClass> parse_class(std::string_view name) {
    for (CompositionClass c : kAllClasses)
        if (class_name(c) == name) return c;
    return std::nullopt;
}

std::string_view statistic_name(Statistic s) {
    switch (s) {
        case Statistic::Rises: return "rises";
        case Statistic::Levels: return "levels";
        case Statistic::Drops: return "drops";
        case Statistic::Parts: return "parts";
    }
    return "?";
}

std::optional<Statistic> parse_statistic(std::string_view name) {
    for (Statistic s : {Statistic::Rises, Statistic::Levels, Statistic::Drops, Statistic::Parts})
        if (statistic_name(s) == name) return s;
    return std::nullopt;
}

Marker marker_of(Statistic s) {
    switch (s) {
        case Statistic::Rises: return Marker::Rises;
        case Statistic::Levels: return Marker::Levels;
        case Statistic::Drops: return Marker::Drops;
        case Statistic::Parts: return Marker::Parts;
    }
    return Marker::Parts;
}

Substitution::Substitution(std::initializer_list<std::pair<Marker, long long>> values) {
    for (const auto& [m, v] : values) set(m, v);
}

bool Substitution::empty() const {
    for (const auto& v : values_)
        if (v) return false;
    return true;
}

Substitution Substitution::merged(const Substitution& other) const {
    Substitution out = *this;
    for (Marker m : kAllMarkers)
        if (other.fixes(m)) out.set(m, *other.get(m));
    return out;
}

std::string Substitution::to_string() const {
    std::string s;
    for (Marker m : kAllMarkers) {
        if (!fixes(m)) continue;
        if (!s.empty()) s += ',';
        s += marker_letter(m);
        s += '=';
        s += std::to_string(*get(m));
    }
    return s;
}

std::uint64_t JointDistribution::total() const {
    std::uint64_t t = 0;
    for (const auto& [key, count] : counts) t += count;
    return t;
}

}  // namespace compstat
