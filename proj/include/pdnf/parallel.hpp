#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdnf/normalizer.hpp"

namespace pdnf
{

// All mu with 0 <= mu <= target componentwise and |mu| >= 1, grouped by level.
// These are the only multi-indices the normal-form coefficient at the
// target depends on.
struct DivisorClosure {
    MultiIndex target;
    std::map<unsigned, std::vector<MultiIndex>> by_level;

    std::size_t size() const;
    bool contains(const MultiIndex &mu) const { return !mu.is_zero() && mu.divides(target); }
};

DivisorClosure divisor_closure(const MultiIndex &target);

// Normal-form coefficient at a resonant target, computed with every field
// restricted to the target's divisors. Equal to the coefficient of a full
// normalize() run at level |target|.
CoeffVector coefficient_at(const SpecPtr &spec, const MultiIndex &target);
CoeffVector coefficient_at(const GVF &initial, const MultiIndex &target);

struct TargetOutcome {
    std::optional<CoeffVector> value;
    std::string error;
};

using TargetResults = std::map<MultiIndex, TargetOutcome, DegLexOrder>;

// coefficient_at for each distinct target, spread over `workers` threads.
// A failing target records its error without affecting the others.
TargetResults normalize_targets(const SpecPtr &spec, std::span<const MultiIndex> targets, unsigned workers);

// Every mu with 1 <= |mu| <= max_level and zero resonance weight, in
// degree-lexicographic order.
std::vector<MultiIndex> resonant_multi_indices(const SystemSpec &spec, unsigned max_level);

} // namespace pdnf
