#include "compstat/marker_poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace compstat {

char marker_letter(Marker m) {
    switch (m) {
        case Marker::Parts: return 'y';
        case Marker::Rises: return 'r';
        case Marker::Levels: return 'l';
        case Marker::Drops: return 'd';
    }
    return '?';
}

Marker parse_marker(std::string_view name) {
    if (name == "y") return Marker::Parts;
    if (name == "r") return Marker::Rises;
    if (name == "l" || name == "\xE2\x84\x93") return Marker::Levels;
    if (name == "d") return Marker::Drops;
    throw std::invalid_argument("unknown marker '" + std::string(name) + "' (expected y, r, l or d)");
}

Monomial::Monomial(std::uint32_t ey, std::uint32_t er, std::uint32_t el, std::uint32_t ed) {
    if (ey > kMaxExponent || er > kMaxExponent || el > kMaxExponent || ed > kMaxExponent)
        throw std::overflow_error("marker exponent exceeds 16-bit lane");
    key_ = (std::uint64_t{ey} << 48) | (std::uint64_t{er} << 32) | (std::uint64_t{el} << 16) |
           std::uint64_t{ed};
}

Monomial Monomial::of(Marker which, std::uint32_t exponent) {
    return Monomial{}.with_exponent(which, exponent);
}

Monomial Monomial::with_exponent(Marker which, std::uint32_t e) const {
    if (e > kMaxExponent) throw std::overflow_error("marker exponent exceeds 16-bit lane");
    const int s = shift(which);
    return from_key((key_ & ~(std::uint64_t{kMaxExponent} << s)) | (std::uint64_t{e} << s));
}

Monomial Monomial::operator*(Monomial other) const {
    // Lanes never carry into each other while every exponent stays below 2^15.
    assert(((key_ | other.key_) & 0x8000800080008000ULL) == 0);
    return from_key(key_ + other.key_);
}

// ---------------------------------------------------------------------------

namespace {

bool by_monomial(const MarkerPoly::Term& a, const MarkerPoly::Term& b) { return a.first < b.first; }

// Sort, merge equal monomials and drop zeros, in place.
void canonicalize(std::vector<MarkerPoly::Term>& terms) {
    std::sort(terms.begin(), terms.end(), by_monomial);
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        BigInt sum = std::move(terms[i].second);
        while (j < terms.size() && terms[j].first == terms[i].first) {
            sum += terms[j].second;
            ++j;
        }
        if (!sum.is_zero()) {
            terms[out].first = terms[i].first;
            terms[out].second = std::move(sum);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

}  // namespace

MarkerPoly::MarkerPoly(BigInt constant) {
    if (!constant.is_zero()) terms_.emplace_back(Monomial{}, std::move(constant));
}

MarkerPoly::MarkerPoly(Monomial m, BigInt c) {
    if (!c.is_zero()) terms_.emplace_back(m, std::move(c));
}

MarkerPoly MarkerPoly::from_terms(std::vector<Term> terms) {
    canonicalize(terms);
    MarkerPoly p;
    p.terms_ = std::move(terms);
    return p;
}

bool MarkerPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

BigInt MarkerPoly::coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

bool MarkerPoly::free_of(Marker which) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [which](const Term& t) { return t.first.exponent(which) == 0; });
}

MarkerPoly MarkerPoly::operator-() const {
    MarkerPoly out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

void MarkerPoly::add_scaled(const MarkerPoly& other, int sign) {
    if (other.terms_.empty()) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.emplace_back(b->first, sign > 0 ? b->second : BigInt(-b->second));
            ++b;
        } else {
            BigInt c = sign > 0 ? BigInt(a->second + b->second) : BigInt(a->second - b->second);
            if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
}

MarkerPoly& MarkerPoly::operator+=(const MarkerPoly& other) {
    add_scaled(other, +1);
    return *this;
}

MarkerPoly& MarkerPoly::operator-=(const MarkerPoly& other) {
    add_scaled(other, -1);
    return *this;
}

void accumulate_product(std::vector<MarkerPoly::Term>& out, const MarkerPoly& a,
                        const MarkerPoly& b) {
    out.reserve(out.size() + a.size() * b.size());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.emplace_back(ma * mb, ca * cb);
}

MarkerPoly operator*(const MarkerPoly& a, const MarkerPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1 && a.terms_[0].first.is_one()) return b.scaled(a.terms_[0].second);
    if (b.size() == 1 && b.terms_[0].first.is_one()) return a.scaled(b.terms_[0].second);
    std::vector<MarkerPoly::Term> raw;
    accumulate_product(raw, a, b);
    return MarkerPoly::from_terms(std::move(raw));
}

MarkerPoly MarkerPoly::scaled(const BigInt& factor) const {
    if (factor.is_zero()) return {};
    MarkerPoly out = *this;
    for (auto& t : out.terms_) t.second *= factor;
    return out;
}

MarkerPoly MarkerPoly::times_monomial(Monomial m) const {
    MarkerPoly out = *this;
    for (auto& t : out.terms_) t.first = t.first * m;
    return out;  // multiplication by a monomial preserves the ordering
}

MarkerPoly MarkerPoly::derivative(Marker which) const {
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        const std::uint32_t e = m.exponent(which);
        if (e == 0) continue;
        raw.emplace_back(m.with_exponent(which, e - 1), c * e);
    }
    return from_terms(std::move(raw));
}

MarkerPoly MarkerPoly::evaluated(Marker which, const BigInt& value) const {
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        const std::uint32_t e = m.exponent(which);
        if (e == 0) {
            raw.emplace_back(m, c);
        } else if (!value.is_zero()) {
            raw.emplace_back(m.with_exponent(which, 0), c * boost::multiprecision::pow(value, e));
        }
    }
    return from_terms(std::move(raw));
}

std::string MarkerPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string factors;
        for (Marker mk : kAllMarkers) {
            const auto e = m.exponent(mk);
            if (e == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += marker_letter(mk);
            if (e > 1) factors += '^' + std::to_string(e);
        }
        if (factors.empty()) {
            os << mag;
        } else if (mag == 1) {
            os << factors;
        } else {
            os << mag << '*' << factors;
        }
    }
    return os.str();
}

}  // namespace compstat
