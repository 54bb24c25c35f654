#include "pdnf/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace pdnf
{

namespace
{

// Calls visit(mu) for every mu with mu <= bound componentwise, in
// lexicographic order of the entries.
template <typename Visit>
void for_each_divisor(const MultiIndex &bound, Visit &&visit)
{
    std::vector<std::uint32_t> current(bound.size(), 0);
    while (true) {
        visit(MultiIndex(current));
        std::size_t j = current.size();
        while (j > 0) {
            --j;
            if (current[j] < bound[j]) {
                ++current[j];
                break;
            }
            current[j] = 0;
            if (j == 0) {
                return;
            }
        }
        if (current.empty()) {
            return;
        }
    }
}

// Calls visit(mu) for every mu of length ell with |mu| == level.
template <typename Visit>
void for_each_of_level(std::size_t ell, unsigned level, std::vector<std::uint32_t> &prefix, Visit &&visit)
{
    if (prefix.size() + 1 == ell) {
        prefix.push_back(level);
        visit(MultiIndex(prefix));
        prefix.pop_back();
        return;
    }
    for (unsigned k = level + 1; k-- > 0;) {
        prefix.push_back(k);
        for_each_of_level(ell, level - k, prefix, visit);
        prefix.pop_back();
    }
}

} // namespace

std::size_t DivisorClosure::size() const
{
    std::size_t total = 0;
    for (const auto &[level, members] : by_level) {
        total += members.size();
    }
    return total;
}

DivisorClosure divisor_closure(const MultiIndex &target)
{
    if (target.is_zero()) {
        throw std::invalid_argument("divisor closure needs a nonzero target");
    }
    DivisorClosure closure{target, {}};
    for_each_divisor(target, [&](MultiIndex mu) {
        if (!mu.is_zero()) {
            closure.by_level[mu.level()].push_back(std::move(mu));
        }
    });
    for (auto &[level, members] : closure.by_level) {
        std::sort(members.begin(), members.end(), DegLexOrder{});
    }
    return closure;
}

CoeffVector coefficient_at(const SpecPtr &spec, const MultiIndex &target)
{
    return coefficient_at(initial_field(spec), target);
}

CoeffVector coefficient_at(const GVF &initial, const MultiIndex &target)
{
    const SystemSpec &spec = initial.spec();
    if (target.size() != spec.parameter_count()) {
        throw std::invalid_argument("target has length " + std::to_string(target.size()) + ", system has "
                                    + std::to_string(spec.parameter_count()) + " parameters");
    }
    if (target.is_zero()) {
        throw std::invalid_argument("target must be nonzero");
    }
    if (!resonance_weight(spec, target).is_zero()) {
        throw std::invalid_argument("target (" + target.to_string(',') + ") is not resonant: weight "
                                    + resonance_weight(spec, target).to_string());
    }
    const auto keep = [&target](const MultiIndex &mu) { return mu.divides(target); };
    const auto result = normalize(initial, target.level(), keep);
    return result.alpha.coefficient(target);
}

TargetResults normalize_targets(const SpecPtr &spec, std::span<const MultiIndex> targets, unsigned workers)
{
    const std::set<MultiIndex, DegLexOrder> unique(targets.begin(), targets.end());
    const std::vector<MultiIndex> jobs(unique.begin(), unique.end());
    std::vector<TargetOutcome> outcomes(jobs.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            try {
                outcomes[k].value = coefficient_at(spec, jobs[k]);
            } catch (const std::exception &e) {
                outcomes[k].error = e.what();
            }
        }
    };

    const unsigned threads = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work);
        }
    }

    TargetResults results;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        results.emplace(jobs[k], std::move(outcomes[k]));
    }
    return results;
}

std::vector<MultiIndex> resonant_multi_indices(const SystemSpec &spec, unsigned max_level)
{
    std::vector<MultiIndex> out;
    const std::size_t ell = spec.parameter_count();
    if (ell == 0) {
        return out;
    }
    std::vector<std::uint32_t> prefix;
    for (unsigned level = 1; level <= max_level; ++level) {
        for_each_of_level(ell, level, prefix, [&](MultiIndex mu) {
            if (resonance_weight(spec, mu).is_zero()) {
                out.push_back(std::move(mu));
            }
        });
    }
    return out;
}

} // namespace pdnf
