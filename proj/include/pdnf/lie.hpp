#pragma once

#include <functional>
#include <optional>

#include "pdnf/gvf.hpp"

namespace pdnf
{

// Filter on the multi-indices a computation may produce or consume. An
// empty filter keeps everything.
using SupportFilter = std::function<bool(const MultiIndex &)>;

struct BracketOptions {
    // Drop products with |mu + nu| above this level.
    std::optional<unsigned> max_level;
    SupportFilter keep;
};

// [theta, phi] = sum_{mu,nu} (<L(nu),theta_mu> phi_nu - <L(mu),phi_nu> theta_mu) a^{mu+nu},
// the image of the Jacobian bracket D(phi) theta - D(theta) phi.
GVF bracket(const GVF &theta, const GVF &phi, const BracketOptions &options = {});

// Scales each term by its resonance weight <L(mu), lambda>; resonant terms vanish.
GVF homological_apply(const GVF &f);

// sum_i (1/i!) (ad eta)^i f truncated at max_level. eta must be of a single
// level s >= 1, so levels below s pass through unchanged.
GVF apply_exp_ad(const GVF &eta, const GVF &f, unsigned max_level, const SupportFilter &keep = {});

} // namespace pdnf
