#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace compstat {

using BigInt = boost::multiprecision::cpp_int;

/// The four statistic markers: y (parts), r (rises), l (levels), d (drops).
enum class Marker : std::uint8_t { Parts = 0, Rises = 1, Levels = 2, Drops = 3 };

inline constexpr std::array<Marker, 4> kAllMarkers = {Marker::Parts, Marker::Rises,
                                                      Marker::Levels, Marker::Drops};

/// Single-letter name used in printed series ("y", "r", "l", "d").
char marker_letter(Marker m);

/// Parses "y", "r", "l" (or "ℓ") and "d". Throws std::invalid_argument otherwise.
Marker parse_marker(std::string_view name);

/// Exponent vector (e_y, e_r, e_l, e_d) packed into 16-bit lanes of one word.
///
/// y occupies the most significant lane, so comparing packed keys orders
/// monomials lexicographically by (y, r, l, d). Multiplication of monomials
/// is addition of keys as long as no lane overflows; the series orders we
/// support keep every exponent far below 2^16.
class Monomial {
public:
    static constexpr int kLaneBits = 16;
    static constexpr std::uint32_t kMaxExponent = 0xFFFF;

    constexpr Monomial() = default;
    Monomial(std::uint32_t ey, std::uint32_t er, std::uint32_t el, std::uint32_t ed);

    static constexpr Monomial from_key(std::uint64_t key) {
        Monomial m;
        m.key_ = key;
        return m;
    }
    static Monomial of(Marker which, std::uint32_t exponent = 1);

    std::uint32_t exponent(Marker which) const {
        return static_cast<std::uint32_t>((key_ >> shift(which)) & kMaxExponent);
    }
    Monomial with_exponent(Marker which, std::uint32_t e) const;

    std::uint64_t key() const { return key_; }
    bool is_one() const { return key_ == 0; }

    Monomial operator*(Monomial other) const;

    friend constexpr bool operator==(Monomial a, Monomial b) { return a.key_ == b.key_; }
    friend constexpr auto operator<=>(Monomial a, Monomial b) { return a.key_ <=> b.key_; }

private:
    static constexpr int shift(Marker which) {
        return (3 - static_cast<int>(which)) * kLaneBits;
    }
    std::uint64_t key_ = 0;
};

/// Sparse multivariate polynomial in y, r, l, d with exact integer coefficients.
///
/// Terms are kept sorted by monomial with no zero coefficients, so structural
/// equality is mathematical equality.
class MarkerPoly {
public:
    using Term = std::pair<Monomial, BigInt>;

    MarkerPoly() = default;
    MarkerPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
    MarkerPoly(long long constant) : MarkerPoly(BigInt(constant)) {}  // NOLINT
    MarkerPoly(Monomial m, BigInt c);

    static MarkerPoly marker(Marker which) { return {Monomial::of(which), BigInt(1)}; }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    static MarkerPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of the monomial, zero when absent.
    BigInt coefficient(Monomial m) const;
    /// Coefficient of 1 (the marker-free part).
    BigInt constant_term() const { return coefficient(Monomial{}); }
    /// True when no term involves `which`.
    bool free_of(Marker which) const;

    MarkerPoly operator-() const;
    MarkerPoly& operator+=(const MarkerPoly& other);
    MarkerPoly& operator-=(const MarkerPoly& other);
    friend MarkerPoly operator+(MarkerPoly a, const MarkerPoly& b) { return a += b; }
    friend MarkerPoly operator-(MarkerPoly a, const MarkerPoly& b) { return a -= b; }
    friend MarkerPoly operator*(const MarkerPoly& a, const MarkerPoly& b);
    MarkerPoly scaled(const BigInt& factor) const;
    MarkerPoly times_monomial(Monomial m) const;

    MarkerPoly derivative(Marker which) const;
    MarkerPoly evaluated(Marker which, const BigInt& value) const;

    /// e.g. "2*y^2*r - l"; "0" for the zero polynomial.
    std::string to_string() const;

    friend bool operator==(const MarkerPoly&, const MarkerPoly&) = default;

private:
    void add_scaled(const MarkerPoly& other, int sign);
    std::vector<Term> terms_;
};

/// Accumulates products without intermediate canonicalisation; used by the
/// series Cauchy product to merge every contribution to one x-degree at once.
void accumulate_product(std::vector<MarkerPoly::Term>& out, const MarkerPoly& a,
                        const MarkerPoly& b);

}  // namespace compstat
