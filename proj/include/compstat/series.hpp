#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "compstat/marker_poly.hpp"

namespace compstat {

/// Raised when two series of different truncation orders are combined, or a
/// precondition of a series operation does not hold.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised by recip() when the constant term is not exactly 1.
class NotInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Power series in x truncated at a fixed order N (inclusive), with
/// MarkerPoly coefficients. Every operation keeps the order of its operands;
/// degree > N information is never stored.
class TruncatedSeries {
public:
    static constexpr int kMaxOrder = 4096;

    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<MarkerPoly> coeffs);

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
    static TruncatedSeries one(int order) { return constant(order, MarkerPoly(1)); }
    static TruncatedSeries constant(int order, MarkerPoly c);
    /// c * x^degree; empty (zero) if degree > order.
    static TruncatedSeries monomial(int order, int degree, MarkerPoly c);

    int order() const { return order_; }
    const std::vector<MarkerPoly>& coeffs() const { return coeffs_; }

    /// Coefficient of x^n. Throws std::out_of_range if n is outside [0, order].
    const MarkerPoly& coeff(int n) const;
    bool is_zero() const;
    /// Smallest x-degree with a nonzero coefficient, or order+1 for the zero series.
    int valuation() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries& operator*=(const TruncatedSeries& other) { return *this = *this * other; }

    TruncatedSeries scaled(const MarkerPoly& factor) const;

    /// Multiplicative inverse; requires coeff(0) == 1.
    TruncatedSeries recip() const;
    TruncatedSeries diff_marker(Marker which) const;
    TruncatedSeries eval_marker(Marker which, const BigInt& value) const;
    /// Keeps degrees 0..new_order; new_order must not exceed order().
    TruncatedSeries truncated(int new_order) const;

    /// True when no coefficient mentions `which`.
    bool free_of(Marker which) const;

    /// Canonical text: ascending x-degree, then ascending (y, r, l, d).
    std::string to_string() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void require_same_order(const TruncatedSeries& other, const char* op) const;

    int order_;
    std::vector<MarkerPoly> coeffs_;
};

// Free-function spellings of the ring operations.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries recip(const TruncatedSeries& a);
TruncatedSeries diff_marker(const TruncatedSeries& a, Marker which);
TruncatedSeries eval_marker(const TruncatedSeries& a, Marker which, const BigInt& value);
const MarkerPoly& coeff(const TruncatedSeries& a, int n);

}  // namespace compstat
