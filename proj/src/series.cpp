#include "compstat/series.hpp"

#include <sstream>

namespace compstat {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0 || order > kMaxOrder)
        throw ContractError("truncation order " + std::to_string(order) + " outside [0, " +
                            std::to_string(kMaxOrder) + "]");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<MarkerPoly> coeffs)
    : TruncatedSeries(order) {
    if (coeffs.size() > coeffs_.size()) coeffs.resize(coeffs_.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

TruncatedSeries TruncatedSeries::constant(int order, MarkerPoly c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int degree, MarkerPoly c) {
    TruncatedSeries s(order);
    if (degree < 0) throw ContractError("negative x-degree");
    if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = std::move(c);
    return s;
}

const MarkerPoly& TruncatedSeries::coeff(int n) const {
    if (n < 0 || n > order_)
        throw std::out_of_range("coefficient x^" + std::to_string(n) + " outside truncation order " +
                                std::to_string(order_));
    return coeffs_[static_cast<std::size_t>(n)];
}

bool TruncatedSeries::is_zero() const { return valuation() > order_; }

int TruncatedSeries::valuation() const {
    for (int n = 0; n <= order_; ++n)
        if (!coeffs_[static_cast<std::size_t>(n)].is_zero()) return n;
    return order_ + 1;
}

void TruncatedSeries::require_same_order(const TruncatedSeries& other, const char* op) const {
    if (order_ != other.order_)
        throw ContractError(std::string(op) + ": truncation orders differ (" +
                            std::to_string(order_) + " vs " + std::to_string(other.order_) + ")");
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    require_same_order(other, "add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    require_same_order(other, "sub");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b, "mul");
    const int order = a.order_;
    std::vector<int> nz_a;
    std::vector<int> nz_b;
    for (int i = 0; i <= order; ++i) {
        if (!a.coeffs_[static_cast<std::size_t>(i)].is_zero()) nz_a.push_back(i);
        if (!b.coeffs_[static_cast<std::size_t>(i)].is_zero()) nz_b.push_back(i);
    }
    TruncatedSeries out(order);
    if (nz_a.empty() || nz_b.empty()) return out;

    std::vector<MarkerPoly::Term> raw;
    const int lowest = nz_a.front() + nz_b.front();
    for (int n = lowest; n <= order; ++n) {
        raw.clear();
        for (int i : nz_a) {
            if (i > n) break;
            const auto& bj = b.coeffs_[static_cast<std::size_t>(n - i)];
            if (!bj.is_zero()) accumulate_product(raw, a.coeffs_[static_cast<std::size_t>(i)], bj);
        }
        if (!raw.empty()) out.coeffs_[static_cast<std::size_t>(n)] = MarkerPoly::from_terms(std::move(raw));
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const MarkerPoly& factor) const {
    TruncatedSeries out(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) out.coeffs_[i] = coeffs_[i] * factor;
    return out;
}

TruncatedSeries TruncatedSeries::recip() const {
    if (!coeffs_[0].is_one())
        throw NotInvertibleError("recip: constant term is " + coeffs_[0].to_string() +
                                 ", only series with constant term 1 are invertible here");
    TruncatedSeries out(order_);
    out.coeffs_[0] = MarkerPoly(1);
    std::vector<int> nz;
    std::vector<MarkerPoly::Term> raw;
    for (int n = 1; n <= order_; ++n) {
        if (!coeffs_[static_cast<std::size_t>(n)].is_zero()) nz.push_back(n);
        raw.clear();
        for (int i : nz) {
            const auto& prev = out.coeffs_[static_cast<std::size_t>(n - i)];
            if (!prev.is_zero()) accumulate_product(raw, coeffs_[static_cast<std::size_t>(i)], prev);
        }
        if (!raw.empty()) out.coeffs_[static_cast<std::size_t>(n)] = -MarkerPoly::from_terms(std::move(raw));
    }
    return out;
}

TruncatedSeries TruncatedSeries::diff_marker(Marker which) const {
    TruncatedSeries out(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i].derivative(which);
    return out;
}

TruncatedSeries TruncatedSeries::eval_marker(Marker which, const BigInt& value) const {
    TruncatedSeries out(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = coeffs_[i].evaluated(which, value);
    return out;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order_)
        throw ContractError("truncated: cannot raise order " + std::to_string(order_) + " to " +
                            std::to_string(new_order));
    return {new_order, std::vector<MarkerPoly>(coeffs_.begin(), coeffs_.begin() + new_order + 1)};
}

bool TruncatedSeries::free_of(Marker which) const {
    for (const auto& c : coeffs_)
        if (!c.free_of(which)) return false;
    return true;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= order_; ++n) {
        for (const auto& [m, c] : coeffs_[static_cast<std::size_t>(n)].terms()) {
            const bool neg = c < 0;
            const BigInt mag = neg ? BigInt(-c) : c;
            if (first) {
                if (neg) os << '-';
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;

            std::string factors;
            auto append = [&factors](char letter, unsigned e) {
                if (e == 0) return;
                if (!factors.empty()) factors += '*';
                factors += letter;
                if (e > 1) factors += '^' + std::to_string(e);
            };
            append('x', static_cast<unsigned>(n));
            for (Marker mk : kAllMarkers) append(marker_letter(mk), m.exponent(mk));

            if (factors.empty()) {
                os << mag;
            } else if (mag == 1) {
                os << factors;
            } else {
                os << mag << '*' << factors;
            }
        }
    }
    if (first) return "0";
    return os.str();
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
TruncatedSeries recip(const TruncatedSeries& a) { return a.recip(); }
TruncatedSeries diff_marker(const TruncatedSeries& a, Marker which) { return a.diff_marker(which); }
TruncatedSeries eval_marker(const TruncatedSeries& a, Marker which, const BigInt& value) {
    return a.eval_marker(which, value);
}
const MarkerPoly& coeff(const TruncatedSeries& a, int n) { return a.coeff(n); }

}  // namespace compstat
