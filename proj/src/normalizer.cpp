#include "pdnf/normalizer.hpp"

#include <stdexcept>

namespace pdnf
{

HomologicalSplit homological_split(const GVF &slice)
{
    HomologicalSplit split{GVF(slice.spec_ptr()), GVF(slice.spec_ptr())};
    if (slice.empty()) {
        return split;
    }
    const unsigned s = slice.terms().begin()->first.level();
    if (s == 0 || !slice.is_pure_level(s)) {
        throw std::invalid_argument("homological split needs a single-level slice of level >= 1");
    }
    for (const auto &[mu, theta] : slice.terms()) {
        const Scalar w = resonance_weight(slice.spec(), mu);
        if (w.is_zero()) {
            split.resonant.add_term(mu, theta);
        } else {
            split.generator.add_term(mu, theta, Scalar(1) / w);
        }
    }
    return split;
}

NormalFormResult normalize(const SpecPtr &spec, unsigned level)
{
    return normalize(initial_field(spec), level);
}

NormalFormResult normalize(const GVF &initial, unsigned level, const SupportFilter &keep)
{
    if (level < 1) {
        throw std::invalid_argument("normalization level must be at least 1");
    }
    const SystemSpec &spec = initial.spec();
    if (initial.coefficient(MultiIndex(spec.parameter_count())) != spec.eigenvalues()) {
        throw std::invalid_argument("initial field must carry the eigenvalues at mu = 0");
    }

    GVF field = truncate(initial, level);
    if (keep) {
        field = restrict_support(field, [&](const MultiIndex &mu) { return mu.is_zero() || keep(mu); });
    }

    NormalFormResult result{level, GVF(initial.spec_ptr()), {}, {}};
    result.generators.reserve(level);
    for (unsigned s = 1; s <= level; ++s) {
        auto [generator, resonant] = homological_split(level_slice(field, s));
        if (!generator.empty()) {
            GVF next = apply_exp_ad(generator, field, level, keep);
            // The transformed level-s slice is slice + [eta, lambda], which is
            // exactly the resonant part.
            if (level_slice(next, s) != resonant) {
                throw std::logic_error("level " + std::to_string(s) + " slice does not match its resonant part");
            }
            field = std::move(next);
        }
        result.generators.push_back(std::move(generator));
    }
    result.orders = reconstruct(field, level);
    result.alpha = std::move(field);
    return result;
}

unsigned term_order(const SystemSpec &spec, const MultiIndex &mu)
{
    if (mu.is_zero()) {
        throw std::invalid_argument("term order is undefined for mu = 0");
    }
    return static_cast<unsigned>(degree(exponent_map(spec, mu)) + 1);
}

std::map<unsigned, GVF> reconstruct(const GVF &alpha, unsigned level)
{
    std::map<unsigned, GVF> orders;
    for (const auto &[mu, theta] : alpha.terms()) {
        if (mu.is_zero()) {
            continue;
        }
        if (!resonance_weight(alpha.spec(), mu).is_zero()) {
            throw std::invalid_argument("non-resonant term at mu = (" + mu.to_string(',') + ")");
        }
        const unsigned k = term_order(alpha.spec(), mu);
        if (k > level + 1) {
            continue;
        }
        orders.try_emplace(k, alpha.spec_ptr()).first->second.add_term(mu, theta);
    }
    return orders;
}

} // namespace pdnf
