#include "compstat/part_set.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace compstat {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument("set spec, position " + std::to_string(position) + ": " + message),
      position_(position) {}

PartSet PartSet::naturals() { return {Kind::AllNaturals, {}, 0}; }
PartSet PartSet::odds() { return {Kind::Odds, {}, 0}; }

PartSet PartSet::naturals_without(int k) {
    if (k < 1) throw std::invalid_argument("excluded part must be positive");
    return {Kind::NaturalsWithout, {}, k};
}

PartSet PartSet::explicit_set(std::vector<int> parts) {
    if (parts.empty()) throw std::invalid_argument("explicit part set must be nonempty");
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    if (parts.front() < 1) throw std::invalid_argument("parts must be positive integers");
    return {Kind::Explicit, std::move(parts), 0};
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ == text_.size(); }
    bool consume(std::string_view token) {
        if (text_.substr(pos_, token.size()) != token) return false;
        pos_ += token.size();
        return true;
    }

    // A positive decimal integer that fits in an int.
    int positive_int() {
        const std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-')
            throw ParseError("parts must be positive integers", start);
        long long value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range || value > std::numeric_limits<int>::max())
            throw ParseError("integer out of range", start);
        if (ec != std::errc{}) throw ParseError("expected a positive integer", start);
        if (value < 1) throw ParseError("parts must be positive integers", start);
        pos_ += static_cast<std::size_t>(ptr - first);
        return static_cast<int>(value);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

PartSet PartSet::parse(std::string_view spec) {
    Cursor cur(spec);
    if (spec.empty()) throw ParseError("empty set spec", 0);

    if (spec == "N") return naturals();
    if (spec == "odd") return odds();
    if (cur.consume("N\\{")) {
        const int k = cur.positive_int();
        if (!cur.consume("}")) throw ParseError("expected '}'", cur.pos());
        if (!cur.done()) throw ParseError("trailing characters", cur.pos());
        return naturals_without(k);
    }

    const int first = cur.positive_int();
    if (cur.consume("..")) {
        const std::size_t at = cur.pos();
        const int last = cur.positive_int();
        if (!cur.done()) throw ParseError("trailing characters", cur.pos());
        if (last < first) throw ParseError("empty range", at);
        std::vector<int> parts;
        for (int v = first; v <= last; ++v) parts.push_back(v);
        return explicit_set(std::move(parts));
    }

    std::vector<int> parts{first};
    while (!cur.done()) {
        if (!cur.consume(",")) throw ParseError("expected ',' between parts", cur.pos());
        parts.push_back(cur.positive_int());
    }
    return explicit_set(std::move(parts));
}

bool PartSet::contains(int part) const {
    if (part < 1) return false;
    switch (kind_) {
        case Kind::Explicit: return std::binary_search(members_.begin(), members_.end(), part);
        case Kind::AllNaturals: return true;
        case Kind::NaturalsWithout: return part != excluded_;
        case Kind::Odds: return part % 2 == 1;
    }
    return false;
}

std::vector<int> PartSet::materialize(int n) const {
    std::vector<int> out;
    if (kind_ == Kind::Explicit) {
        for (int a : members_) {
            if (a > n) break;
            out.push_back(a);
        }
        return out;
    }
    for (int a = 1; a <= n; ++a)
        if (contains(a)) out.push_back(a);
    return out;
}

std::string PartSet::spec() const {
    switch (kind_) {
        case Kind::AllNaturals: return "N";
        case Kind::Odds: return "odd";
        case Kind::NaturalsWithout: return "N\\{" + std::to_string(excluded_) + "}";
        case Kind::Explicit: break;
    }
    std::string s;
    for (int a : members_) {
        if (!s.empty()) s += ',';
        s += std::to_string(a);
    }
    return s;
}

std::vector<int> materialize(const PartSet& a, int n) { return a.materialize(n); }
PartSet parse_set(std::string_view spec) { return PartSet::parse(spec); }

}  // namespace compstat
