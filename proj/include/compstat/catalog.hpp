#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "compstat/classes.hpp"
#include "compstat/part_set.hpp"
#include "compstat/rational.hpp"

// Closed forms for specialised classes, kept as data and checked against the
// engine by series expansion. The engine never reads this module.
namespace compstat {

enum class Quantity { Count, Total, SecondMoment };

std::string_view quantity_name(Quantity q);

/// What an entry claims to enumerate.
struct CatalogQuery {
    CompositionClass cls = CompositionClass::Compositions;
    PartSet set = PartSet::naturals();
    Quantity quantity = Quantity::Count;
    Statistic stat = Statistic::Rises;  // ignored for Count
    std::optional<int> parts;           // per-m slice
    Substitution extra;                 // further marker values, e.g. l=0

    std::string describe() const;
};

/// Exact integer sequence a(n), claimed for n >= n_min.
struct CountFormula {
    int n_min = 0;
    std::function<BigInt(int n)> value;
};

struct CatalogInstance {
    std::string label;  // parameter values, e.g. "k=3"; empty when unparametrised
    CatalogQuery query;
    /// Exactly one of these is set. The rational form receives the truncation
    /// order so that forms over infinite sets can truncate their sums.
    std::function<RationalGF(int order)> rational;
    std::optional<CountFormula> formula;
};

struct CatalogEntry {
    std::string id;
    std::string anchor;  // the displayed formula, LaTeX
    std::vector<CatalogInstance> instances;
    bool suspect = false;
    std::string rationale;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(std::string_view id);

/// The engine's answer to a query, marker free.
TruncatedSeries engine_series(const CatalogQuery& q, int order);

/// The instance's claimed series; for a CountFormula, degrees below n_min are zero.
TruncatedSeries claimed_series(const CatalogInstance& inst, int order);

struct Verdict {
    bool match = true;
    std::string instance;     // failing instance label
    int first_mismatch = -1;  // x-degree
    BigInt expected;          // engine
    BigInt observed;          // catalog
};

/// Coefficientwise comparison up to `order`; CountFormula instances are
/// compared only from n_min on.
Verdict verify_instance(const CatalogInstance& inst, const TruncatedSeries& engine, int order);

/// All instances, stopping at the first mismatch.
Verdict verify_entry(const CatalogEntry& entry, int order);

/// q / d, throwing std::domain_error when d does not divide q.
BigInt exact_div(const BigInt& q, const BigInt& d);

}  // namespace compstat
