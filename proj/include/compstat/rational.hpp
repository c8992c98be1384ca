#pragma once

#include <initializer_list>
#include <vector>

#include "compstat/series.hpp"

namespace compstat {

/// Dense univariate polynomial in x with integer coefficients; index = degree.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
    IntPoly(long long constant) : IntPoly(BigInt(constant)) {}  // NOLINT
    explicit IntPoly(std::vector<BigInt> coeffs);
    /// Coefficients from degree 0 upward.
    IntPoly(std::initializer_list<long long> coeffs);

    /// c * x^k
    static IntPoly x_pow(int k, BigInt c = 1);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    BigInt coeff(int k) const;
    /// Lowest degree with a nonzero coefficient; -1 for zero.
    int valuation() const;
    /// Divides by x^k; the k lowest coefficients must be zero.
    IntPoly shifted_down(int k) const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly pow(int e) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// numerator / denominator, both in Z[x]. Arithmetic does not reduce by
/// polynomial gcd; it only cancels common powers of x, which keeps
/// denominators with a unit constant term expandable over the integers.
class RationalGF {
public:
    RationalGF(IntPoly numerator = IntPoly(0), IntPoly denominator = IntPoly(1));
    RationalGF(long long c) : RationalGF(IntPoly(c)) {}  // NOLINT

    static RationalGF x_pow(int k, BigInt c = 1) { return {IntPoly::x_pow(k, std::move(c))}; }

    const IntPoly& numerator() const { return num_; }
    const IntPoly& denominator() const { return den_; }

    friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator-(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator*(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator/(const RationalGF& a, const RationalGF& b);
    RationalGF operator-() const { return {-num_, den_}; }
    RationalGF pow(int e) const;

    /// Exact power-series coefficients x^0..x^order.
    /// Throws std::domain_error unless the denominator's constant term is +-1.
    std::vector<BigInt> expand(int order) const;

private:
    void normalize();
    IntPoly num_;
    IntPoly den_;
};

/// The expansion as a marker-free TruncatedSeries.
TruncatedSeries expand(const RationalGF& r, int order);

}  // namespace compstat
