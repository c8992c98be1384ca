#pragma once

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "compstat/marker_poly.hpp"
#include "compstat/series.hpp"

namespace testutil {

using compstat::BigInt;
using compstat::Marker;
using compstat::MarkerPoly;
using compstat::Monomial;
using compstat::TruncatedSeries;

inline MarkerPoly term(long long c, unsigned y = 0, unsigned r = 0, unsigned l = 0, unsigned d = 0) {
    return {Monomial(y, r, l, d), BigInt(c)};
}

/// Series from (degree, coefficient) pairs.
inline TruncatedSeries series(int order, std::initializer_list<std::pair<int, MarkerPoly>> parts) {
    TruncatedSeries s(order);
    for (const auto& [deg, c] : parts) s += TruncatedSeries::monomial(order, deg, c);
    return s;
}

inline std::vector<BigInt> ints(std::initializer_list<long long> v) {
    return {v.begin(), v.end()};
}

/// Small random polynomial: up to 3 terms, exponents <= 2, coefficients in [-9, 9].
inline MarkerPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(0, 3), ex(0, 2), co(-9, 9);
    std::vector<MarkerPoly::Term> terms;
    for (int t = count(rng); t > 0; --t)
        terms.emplace_back(Monomial(ex(rng), ex(rng), ex(rng), ex(rng)), BigInt(co(rng)));
    return MarkerPoly::from_terms(std::move(terms));
}

inline TruncatedSeries random_series(std::mt19937& rng, int order, bool unit_constant = false) {
    std::vector<MarkerPoly> c;
    for (int n = 0; n <= order; ++n) c.push_back(random_poly(rng));
    if (unit_constant) c[0] = MarkerPoly(1);
    return TruncatedSeries(order, std::move(c));
}

}  // namespace testutil
