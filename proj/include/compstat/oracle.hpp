#pragma once

#include <functional>
#include <span>
#include <vector>

#include "compstat/classes.hpp"
#include "compstat/part_set.hpp"

// Brute-force enumeration of compositions; the ground truth the engine is
// checked against. Nothing here touches series arithmetic.
namespace compstat::oracle {

using Composition = std::vector<int>;
using Visitor = std::function<void(std::span<const int>)>;

StatKey statistics(std::span<const int> parts);

/// Membership test for `cls` on an arbitrary composition.
bool belongs(CompositionClass cls, std::span<const int> parts);

/// Visits each object of `cls` of size n with parts in `alphabet` exactly
/// once, in lexicographic order of the part sequence. n = 0 visits the
/// empty composition. Palindromes are generated outside-in rather than by
/// filtering, which keeps their cost proportional to their number.
void enumerate(CompositionClass cls, std::span<const int> alphabet, int n, const Visitor& visit);
void enumerate(CompositionClass cls, const PartSet& a, int n, const Visitor& visit);

/// Same stream, produced by generating every composition and filtering with belongs().
void enumerate_filtered(CompositionClass cls, std::span<const int> alphabet, int n,
                        const Visitor& visit);

/// Materialised stream; only for small n.
std::vector<Composition> enumerate_all(CompositionClass cls, const PartSet& a, int n);

JointDistribution joint_distribution(CompositionClass cls, const PartSet& a, int n);

}  // namespace compstat::oracle
