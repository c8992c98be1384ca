#include "compstat/engine.hpp"

#include <cassert>
#include <limits>
#include <string>

namespace compstat {

namespace {

// Marker values as coefficient polynomials: either the marker itself or the
// substituted integer.
struct Markers {
    MarkerPoly y, r, l, d;

    explicit Markers(const Substitution& at)
        : y(pick(at, Marker::Parts)),
          r(pick(at, Marker::Rises)),
          l(pick(at, Marker::Levels)),
          d(pick(at, Marker::Drops)) {}

    static MarkerPoly pick(const Substitution& at, Marker m) {
        if (const auto& v = at.get(m)) return MarkerPoly(BigInt(*v));
        return MarkerPoly::marker(m);
    }
};

// c * x^degree as a series of the given order.
TruncatedSeries term(int order, int degree, const MarkerPoly& c) {
    return TruncatedSeries::monomial(order, degree, c);
}

TruncatedSeries one_minus(int order, int degree, const MarkerPoly& c) {
    return TruncatedSeries::one(order) - term(order, degree, c);
}

}  // namespace

TruncatedSeries comp_gf(const PartSet& a, int order, const Substitution& at) {
    const Markers mk(at);
    const MarkerPoly level_minus_drop = mk.l - mk.d;
    const MarkerPoly level_minus_rise = mk.l - mk.r;

    // sum_j  b_j / (1 - b_j(l-d)) * prod_{i<j} (1 - b_i(l-r)) / (1 - b_i(l-d)),  b_j = x^{a_j} y
    TruncatedSeries sum = TruncatedSeries::zero(order);
    TruncatedSeries running = TruncatedSeries::one(order);
    for (int part : a.materialize(order)) {
        const TruncatedSeries inner = one_minus(order, part, mk.y * level_minus_drop).recip();
        const TruncatedSeries scaled_running = running * inner;
        sum += scaled_running * term(order, part, mk.y);
        running = scaled_running * one_minus(order, part, mk.y * level_minus_rise);
    }

    TruncatedSeries numerator = TruncatedSeries::one(order) + sum.scaled(MarkerPoly(1) - mk.d);
    TruncatedSeries denominator = TruncatedSeries::one(order) - sum.scaled(mk.d);
    return numerator * denominator.recip();
}

TruncatedSeries comp_gf_via_system(const PartSet& a, int order, const Substitution& at) {
    const Markers mk(at);
    const std::vector<int> parts = a.materialize(order);
    const std::size_t k = parts.size();

    // Rows/columns 0..k-1 stand for t_1..t_k; t_0 is recovered at the end from
    // its own equation t_0 = 1 + sum t_i.
    std::vector<std::vector<TruncatedSeries>> m(k, std::vector<TruncatedSeries>(k, TruncatedSeries(order)));
    std::vector<TruncatedSeries> rhs;
    rhs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const int part = parts[i];
        for (std::size_t j = 0; j < k; ++j) {
            if (j < i) m[i][j] = -term(order, part, mk.y * mk.d);
            else if (j == i) m[i][j] = one_minus(order, part, mk.y * mk.l);
            else m[i][j] = -term(order, part, mk.y * mk.r);
        }
        rhs.push_back(term(order, part, mk.y));
    }

    // Forward elimination in natural order, no pivoting.
    std::vector<TruncatedSeries> pivot_inverse;
    pivot_inverse.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
        if (!m[c][c].coeff(0).is_one())
            throw std::logic_error("comp_gf_via_system: pivot " + std::to_string(c + 1) +
                                   " lost its unit constant term");
        pivot_inverse.push_back(m[c][c].recip());
        for (std::size_t i = c + 1; i < k; ++i) {
            if (m[i][c].is_zero()) continue;
            const TruncatedSeries factor = m[i][c] * pivot_inverse[c];
            for (std::size_t j = c + 1; j < k; ++j) m[i][j] -= factor * m[c][j];
            rhs[i] -= factor * rhs[c];
            m[i][c] = TruncatedSeries(order);
        }
    }

    // Back substitution.
    std::vector<TruncatedSeries> t(k, TruncatedSeries(order));
    for (std::size_t c = k; c-- > 0;) {
        TruncatedSeries acc = rhs[c];
        for (std::size_t j = c + 1; j < k; ++j) acc -= m[c][j] * t[j];
        t[c] = acc * pivot_inverse[c];
    }

    TruncatedSeries t0 = TruncatedSeries::one(order);
    for (const auto& ti : t) t0 += ti;
    return t0;
}

TruncatedSeries pal_gf(const PartSet& a, int order, const Substitution& at) {
    const Markers mk(at);
    const MarkerPoly y2 = mk.y * mk.y;
    const MarkerPoly drop_rise = mk.d * mk.r;
    const MarkerPoly inner_marker = y2 * (mk.l * mk.l - drop_rise);

    // (1 + sum_i (b_i + b_i^2 (l - dr)) / q_i) / (1 - sum_i b_i^2 dr / q_i),
    // q_i = 1 - b_i^2 (l^2 - dr)
    TruncatedSeries numerator = TruncatedSeries::one(order);
    TruncatedSeries denominator = TruncatedSeries::one(order);
    for (int part : a.materialize(order)) {
        const TruncatedSeries inner = one_minus(order, 2 * part, inner_marker).recip();
        numerator += (term(order, part, mk.y) + term(order, 2 * part, y2 * (mk.l - drop_rise))) * inner;
        denominator -= term(order, 2 * part, y2 * drop_rise) * inner;
    }
    return numerator * denominator.recip();
}

Substitution class_substitution(CompositionClass cls) {
    switch (cls) {
        case CompositionClass::Compositions:
        case CompositionClass::Palindromes: return {};
        case CompositionClass::Carlitz: return {{Marker::Levels, 0}};
        case CompositionClass::CarlitzPalindromes: return {{Marker::Levels, 0}, {Marker::Drops, 1}};
        case CompositionClass::Partitions: return {{Marker::Rises, 0}};
    }
    return {};
}

TruncatedSeries carlitz_gf(const PartSet& a, int order, const Substitution& at) {
    return comp_gf(a, order, at.merged(class_substitution(CompositionClass::Carlitz)));
}

TruncatedSeries carlitz_pal_gf(const PartSet& a, int order, const Substitution& at) {
    return pal_gf(a, order, at.merged(class_substitution(CompositionClass::CarlitzPalindromes)));
}

TruncatedSeries partition_gf(const PartSet& a, int order, const Substitution& at) {
    return comp_gf(a, order, at.merged(class_substitution(CompositionClass::Partitions)));
}

TruncatedSeries class_gf(CompositionClass cls, const PartSet& a, int order, const Substitution& at) {
    switch (cls) {
        case CompositionClass::Compositions: return comp_gf(a, order, at);
        case CompositionClass::Palindromes: return pal_gf(a, order, at);
        case CompositionClass::Carlitz: return carlitz_gf(a, order, at);
        case CompositionClass::CarlitzPalindromes: return carlitz_pal_gf(a, order, at);
        case CompositionClass::Partitions: return partition_gf(a, order, at);
    }
    throw std::logic_error("unknown composition class");
}

TruncatedSeries joint_gf(CompositionClass cls, const PartSet& a, int order, const Substitution& at) {
    if (cls == CompositionClass::CarlitzPalindromes)
        return pal_gf(a, order, at.merged({{Marker::Levels, 0}}));
    return class_gf(cls, a, order, at);
}

void require_compatible(CompositionClass cls, Statistic stat) {
    const bool carlitz = cls == CompositionClass::Carlitz || cls == CompositionClass::CarlitzPalindromes;
    if ((carlitz && stat == Statistic::Levels) ||
        (cls == CompositionClass::Partitions && stat == Statistic::Rises)) {
        throw DomainError(std::string(statistic_name(stat)) + " is identically zero for " +
                          std::string(class_name(cls)));
    }
}

namespace {

// The class GF with `stat` symbolic and every other marker at 1 (y kept on request).
TruncatedSeries gf_for_statistic(CompositionClass cls, const PartSet& a, Statistic stat, int order,
                                 bool keep_parts) {
    require_compatible(cls, stat);
    const Marker target = marker_of(stat);
    Substitution at;
    for (Marker m : kAllMarkers)
        if (m != target && !(m == Marker::Parts && keep_parts)) at.set(m, 1);
    // Carlitz palindromes fix d = 1 by construction; drops are read from the
    // l = 0 specialisation of the palindrome GF instead.
    if (cls == CompositionClass::CarlitzPalindromes && stat == Statistic::Drops)
        return pal_gf(a, order, at.merged({{Marker::Levels, 0}}));
    return class_gf(cls, a, order, at);
}

}  // namespace

TruncatedSeries statistic_total(CompositionClass cls, const PartSet& a, Statistic stat, int order,
                                bool keep_parts) {
    const TruncatedSeries gf = gf_for_statistic(cls, a, stat, order, keep_parts);
    const Marker target = marker_of(stat);
    TruncatedSeries derivative = gf.diff_marker(target);
    if (stat == Statistic::Parts && keep_parts) return derivative.scaled(MarkerPoly::marker(Marker::Parts));
    return derivative.eval_marker(target, 1);
}

TruncatedSeries moment_total(CompositionClass cls, const PartSet& a, Statistic stat, int order) {
    const TruncatedSeries gf = gf_for_statistic(cls, a, stat, order, false);
    const Marker target = marker_of(stat);
    return gf.diff_marker(target).diff_marker(target).eval_marker(target, 1);
}

TruncatedSeries per_parts_slice(const TruncatedSeries& series, int m) {
    if (m < 0) throw ContractError("per_parts_slice: negative parts count");
    for (Marker other : {Marker::Rises, Marker::Levels, Marker::Drops})
        if (!series.free_of(other))
            throw ContractError(std::string("per_parts_slice: series still carries marker ") +
                                marker_letter(other));
    const Monomial ym = Monomial::of(Marker::Parts, static_cast<std::uint32_t>(m));
    std::vector<MarkerPoly> layer;
    layer.reserve(series.coeffs().size());
    for (const auto& c : series.coeffs()) layer.emplace_back(c.coefficient(ym));
    return {series.order(), std::move(layer)};
}

std::vector<BigInt> scalar_coefficients(const TruncatedSeries& series) {
    std::vector<BigInt> out;
    out.reserve(series.coeffs().size());
    for (const auto& c : series.coeffs()) {
        if (c.size() > 1 || (c.size() == 1 && !c.terms()[0].first.is_one()))
            throw ContractError("scalar_coefficients: series is not marker free");
        out.push_back(c.constant_term());
    }
    return out;
}

TruncatedSeries at_ones(const TruncatedSeries& series) {
    TruncatedSeries out = series;
    for (Marker m : kAllMarkers) out = out.eval_marker(m, 1);
    return out;
}

JointDistribution joint_from_series(const TruncatedSeries& series, int n) {
    JointDistribution dist;
    dist.n = n;
    for (const auto& [mono, c] : series.coeff(n).terms()) {
        if (c < 0 || c > std::numeric_limits<std::uint64_t>::max())
            throw ContractError("joint_from_series: coefficient " + c.str() +
                                " is not a valid object count");
        const StatKey key{static_cast<int>(mono.exponent(Marker::Parts)),
                          static_cast<int>(mono.exponent(Marker::Rises)),
                          static_cast<int>(mono.exponent(Marker::Levels)),
                          static_cast<int>(mono.exponent(Marker::Drops))};
        dist.counts[key] = c.convert_to<std::uint64_t>();
    }
    return dist;
}

}  // namespace compstat
