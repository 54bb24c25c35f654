#pragma once

#include <map>
#include <vector>

#include "pdnf/lie.hpp"

namespace pdnf
{

struct HomologicalSplit {
    // Non-resonant part divided by its weight.
    GVF generator;
    // Resonant part, kept in the normal form.
    GVF resonant;
};

// Splits a single-level slice so that slice == homological_apply(generator) + resonant.
HomologicalSplit homological_split(const GVF &slice);

struct NormalFormResult {
    unsigned level = 0;
    // lambda + resonant terms of levels 1..level.
    GVF alpha;
    // generators[s - 1] is the level-s generator.
    std::vector<GVF> generators;
    // Phase degree k -> resonant terms of that degree. Only degrees up to
    // level + 1 are fully determined by the level bound, so only those are
    // kept; empty degrees are omitted.
    std::map<unsigned, GVF> orders;
};

// Level-by-level normalization of the system's own field up to `level`.
NormalFormResult normalize(const SpecPtr &spec, unsigned level);

// Same, starting from an arbitrary field whose level-0 part is lambda.
// When `keep` is set every intermediate field is restricted to it.
NormalFormResult normalize(const GVF &initial, unsigned level, const SupportFilter &keep = {});

// Phase degree |L(mu)| + 1 of the terms carried by a^mu; mu must be nonzero.
unsigned term_order(const SystemSpec &spec, const MultiIndex &mu);

// Groups the resonant mu != 0 terms of alpha by phase degree, keeping the
// degrees up to level + 1. Throws on a non-resonant term.
std::map<unsigned, GVF> reconstruct(const GVF &alpha, unsigned level);

} // namespace pdnf
