#pragma once

#include <stdexcept>
#include <vector>

#include "compstat/classes.hpp"
#include "compstat/part_set.hpp"
#include "compstat/series.hpp"

namespace compstat {

/// Statistic that is identically zero (or untracked) for the requested class.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Generating-function constructors.
///
/// Every constructor takes an optional Substitution applied to the markers
/// before the series is built. Substituting is a ring homomorphism, so the
/// result equals building the full series and calling eval_marker afterwards;
/// fixing unneeded markers early keeps the coefficient polynomials small.
///
/// Coefficient of x^n y^m r^i l^j d^h in every GF is the number of objects of
/// size n with m parts, i rises, j levels and h drops. Size 0 holds exactly
/// one (empty) object.

/// Compositions with parts in A: closed form built part by part, with the
/// running product over smaller parts maintained incrementally.
TruncatedSeries comp_gf(const PartSet& a, int order, const Substitution& at = {});

/// Same series as comp_gf, obtained by solving the first-part linear system
/// (t_0 = 1 + sum t_i, t_i = b_i(1 + d sum_{j<i} t_j + l t_i + r sum_{j>i} t_j))
/// with Gaussian elimination over the series ring.
TruncatedSeries comp_gf_via_system(const PartSet& a, int order, const Substitution& at = {});

/// Palindromic compositions.
TruncatedSeries pal_gf(const PartSet& a, int order, const Substitution& at = {});

/// Carlitz compositions: comp_gf with l = 0.
TruncatedSeries carlitz_gf(const PartSet& a, int order, const Substitution& at = {});

/// Carlitz palindromes: pal_gf with l = 0 and d = 1 (drops mirror rises).
TruncatedSeries carlitz_pal_gf(const PartSet& a, int order, const Substitution& at = {});

/// Partitions as weakly decreasing compositions: comp_gf with r = 0.
TruncatedSeries partition_gf(const PartSet& a, int order, const Substitution& at = {});

/// Markers a class fixes by construction (l=0 for Carlitz, r=0 for partitions, ...).
Substitution class_substitution(CompositionClass cls);

/// Dispatches to the constructor of `cls`.
TruncatedSeries class_gf(CompositionClass cls, const PartSet& a, int order,
                         const Substitution& at = {});

/// The class GF with every statistic that the class can carry kept as a
/// marker. Equal to class_gf except for Carlitz palindromes, where drops
/// are tracked too (l = 0 only).
TruncatedSeries joint_gf(CompositionClass cls, const PartSet& a, int order,
                         const Substitution& at = {});

/// Throws DomainError for (Carlitz*, Levels) and (Partitions, Rises).
void require_compatible(CompositionClass cls, Statistic stat);

/// Series whose x^n coefficient is the sum of `stat` over all objects of
/// size n. With keep_parts the y marker is retained so that per-m slices are
/// available; otherwise the result is marker free.
TruncatedSeries statistic_total(CompositionClass cls, const PartSet& a, Statistic stat, int order,
                                bool keep_parts = false);

/// Second factorial moment: sum over objects of stat*(stat-1).
TruncatedSeries moment_total(CompositionClass cls, const PartSet& a, Statistic stat, int order);

/// Coefficient of y^m of a series in x and y only.
TruncatedSeries per_parts_slice(const TruncatedSeries& series, int m);

/// Integer coefficients of a marker-free series, x^0..x^order.
std::vector<BigInt> scalar_coefficients(const TruncatedSeries& series);

/// All markers evaluated at 1.
TruncatedSeries at_ones(const TruncatedSeries& series);

/// Reads the x^n layer of a GF as a joint distribution; markers absent
/// from the series read as exponent 0.
JointDistribution joint_from_series(const TruncatedSeries& series, int n);

}  // namespace compstat
