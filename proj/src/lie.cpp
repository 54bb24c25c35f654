#include "pdnf/lie.hpp"

#include <stdexcept>
#include <vector>

namespace pdnf
{

namespace
{

struct TermView {
    const MultiIndex *mu;
    const CoeffVector *coeff;
    PhaseExponent exponent;
};

std::vector<TermView> with_exponents(const GVF &f)
{
    std::vector<TermView> out;
    out.reserve(f.size());
    for (const auto &[mu, theta] : f.terms()) {
        out.push_back({&mu, &theta, exponent_map(f.spec(), mu)});
    }
    return out;
}

Scalar pairing(const PhaseExponent &m, const CoeffVector &v)
{
    Scalar s;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] != 0 && !v[j].is_zero()) {
            s += Scalar(m[j]) * v[j];
        }
    }
    return s;
}

} // namespace

GVF bracket(const GVF &theta, const GVF &phi, const BracketOptions &options)
{
    if (!theta.same_system(phi)) {
        throw std::invalid_argument("bracket operands belong to different systems");
    }
    GVF out(theta.spec_ptr());
    if (theta.empty() || phi.empty()) {
        return out;
    }
    const auto lhs = with_exponents(theta);
    const auto rhs = with_exponents(phi);
    const std::size_t n = theta.spec().dimension();

    for (const auto &t : lhs) {
        for (const auto &p : rhs) {
            if (options.max_level && t.mu->level() + p.mu->level() > *options.max_level) {
                // rhs is sorted by level, nothing further fits.
                break;
            }
            MultiIndex sum = *t.mu + *p.mu;
            if (options.keep && !options.keep(sum)) {
                continue;
            }
            const Scalar a = pairing(p.exponent, *t.coeff);
            const Scalar b = pairing(t.exponent, *p.coeff);
            if (a.is_zero() && b.is_zero()) {
                continue;
            }
            CoeffVector c(n);
            if (!a.is_zero()) {
                axpy(c, a, *p.coeff);
            }
            if (!b.is_zero()) {
                axpy(c, -b, *t.coeff);
            }
            out.add_term(sum, c);
        }
    }
    return out;
}

GVF homological_apply(const GVF &f)
{
    GVF out(f.spec_ptr());
    for (const auto &[mu, theta] : f.terms()) {
        const Scalar w = resonance_weight(f.spec(), mu);
        if (!w.is_zero()) {
            out.add_term(mu, theta, w);
        }
    }
    return out;
}

GVF apply_exp_ad(const GVF &eta, const GVF &f, unsigned max_level, const SupportFilter &keep)
{
    if (!eta.same_system(f)) {
        throw std::invalid_argument("generator and field belong to different systems");
    }
    GVF result = truncate(f, max_level);
    if (eta.empty()) {
        return result;
    }
    const unsigned s = eta.terms().begin()->first.level();
    if (s == 0 || !eta.is_pure_level(s)) {
        throw std::invalid_argument("generator must be of a single level s >= 1");
    }

    const BracketOptions options{max_level, keep};
    GVF term = result;
    for (unsigned i = 1; !term.empty(); ++i) {
        term = bracket(eta, term, options);
        term *= Scalar(1, static_cast<std::int64_t>(i));
        result += term;
    }
    return result;
}

} // namespace pdnf
