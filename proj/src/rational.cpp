#include "compstat/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace compstat {

IntPoly::IntPoly(BigInt constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) : coeffs_(coeffs.begin(), coeffs.end()) { trim(); }

IntPoly IntPoly::x_pow(int k, BigInt c) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

int IntPoly::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

IntPoly IntPoly::shifted_down(int k) const {
    if (k == 0) return *this;
    if (is_zero()) return {};
    if (valuation() < k) throw std::logic_error("shifted_down: polynomial not divisible by x^k");
    return IntPoly(std::vector<BigInt>(coeffs_.begin() + k, coeffs_.end()));
}

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    IntPoly result(1);
    IntPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

// ---------------------------------------------------------------------------

RationalGF::RationalGF(IntPoly numerator, IntPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalGF::normalize() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    const int common = std::min(num_.valuation(), den_.valuation());
    if (common > 0) {
        num_ = num_.shifted_down(common);
        den_ = den_.shifted_down(common);
    }
    if (den_.coeff(den_.valuation()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalGF operator-(const RationalGF& a, const RationalGF& b) { return a + (-b); }

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalGF operator/(const RationalGF& a, const RationalGF& b) {
    if (b.num_.is_zero()) throw std::domain_error("division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalGF RationalGF::pow(int e) const { return {num_.pow(e), den_.pow(e)}; }

std::vector<BigInt> RationalGF::expand(int order) const {
    const BigInt lead = den_.coeff(0);
    if (lead != 1 && lead != -1)
        throw std::domain_error("expand: denominator constant term is " + lead.str() +
                                ", expected +-1");
    std::vector<BigInt> out(static_cast<std::size_t>(order) + 1);
    const int dd = den_.degree();
    for (int n = 0; n <= order; ++n) {
        BigInt acc = num_.coeff(n);
        for (int j = 1; j <= std::min(n, dd); ++j) acc -= den_.coeffs()[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(n - j)];
        out[static_cast<std::size_t>(n)] = lead == 1 ? acc : BigInt(-acc);
    }
    return out;
}

TruncatedSeries expand(const RationalGF& r, int order) {
    std::vector<BigInt> c = r.expand(order);
    std::vector<MarkerPoly> coeffs;
    coeffs.reserve(c.size());
    for (auto& v : c) coeffs.emplace_back(std::move(v));
    return {order, std::move(coeffs)};
}

}  // namespace compstat
