#include "pdnf/gvf.hpp"

#include <stdexcept>

namespace pdnf
{

GVF::GVF(SpecPtr spec) : m_spec(std::move(spec))
{
    if (!m_spec) {
        throw std::invalid_argument("generalized vector field needs a system");
    }
}

bool GVF::same_system(const GVF &other) const
{
    return m_spec == other.m_spec || *m_spec == *other.m_spec;
}

CoeffVector GVF::coefficient(const MultiIndex &mu) const
{
    const auto it = m_terms.find(mu);
    if (it == m_terms.end()) {
        return CoeffVector(m_spec->dimension());
    }
    return it->second;
}

void GVF::check_term(const MultiIndex &mu, const CoeffVector &theta) const
{
    if (mu.size() != m_spec->parameter_count()) {
        throw std::invalid_argument("multi-index length " + std::to_string(mu.size()) + " does not match "
                                    + std::to_string(m_spec->parameter_count()) + " parameters");
    }
    if (theta.size() != m_spec->dimension()) {
        throw std::invalid_argument("coefficient vector length " + std::to_string(theta.size())
                                    + " does not match dimension " + std::to_string(m_spec->dimension()));
    }
}

void GVF::add_term(const MultiIndex &mu, const CoeffVector &theta, const Scalar &factor)
{
    check_term(mu, theta);
    if (factor.is_zero() || is_zero(theta)) {
        return;
    }
    const auto it = m_terms.find(mu);
    CoeffVector sum = it == m_terms.end() ? CoeffVector(theta.size()) : it->second;
    axpy(sum, factor, theta);
    if (is_zero(sum)) {
        if (it != m_terms.end()) {
            m_terms.erase(it);
        }
        return;
    }

    // Component i of the term is theta_i x_i x^{L(mu)}; its exponent must
    // stay nonnegative.
    const auto m = exponent_map(*m_spec, mu);
    for (std::size_t i = 0; i < sum.size(); ++i) {
        if (sum[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m[j] + (i == j ? 1 : 0) < 0) {
                throw std::invalid_argument("term at mu = (" + mu.to_string(',') + ") has a nonzero coefficient on component "
                                            + std::to_string(i + 1) + " but L(mu) has a negative entry at position "
                                            + std::to_string(j + 1));
            }
        }
    }
    if (it == m_terms.end()) {
        m_terms.emplace(mu, std::move(sum));
    } else {
        it->second = std::move(sum);
    }
}

GVF &GVF::operator+=(const GVF &other)
{
    if (!same_system(other)) {
        throw std::invalid_argument("generalized vector fields belong to different systems");
    }
    for (const auto &[mu, theta] : other.m_terms) {
        add_term(mu, theta);
    }
    return *this;
}

GVF &GVF::operator-=(const GVF &other)
{
    if (!same_system(other)) {
        throw std::invalid_argument("generalized vector fields belong to different systems");
    }
    for (const auto &[mu, theta] : other.m_terms) {
        add_term(mu, theta, Scalar(-1));
    }
    return *this;
}

GVF &GVF::operator*=(const Scalar &factor)
{
    if (factor.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[mu, theta] : m_terms) {
        for (auto &c : theta) {
            c *= factor;
        }
    }
    return *this;
}

GVF GVF::hadamard(const CoeffVector &v) const
{
    if (v.size() != m_spec->dimension()) {
        throw std::invalid_argument("Hadamard factor has the wrong length");
    }
    GVF out(m_spec);
    for (const auto &[mu, theta] : m_terms) {
        CoeffVector scaled(theta.size());
        for (std::size_t i = 0; i < theta.size(); ++i) {
            scaled[i] = theta[i] * v[i];
        }
        if (!is_zero(scaled)) {
            out.m_terms.emplace(mu, std::move(scaled));
        }
    }
    return out;
}

int GVF::max_level() const
{
    return m_terms.empty() ? -1 : static_cast<int>(m_terms.rbegin()->first.level());
}

bool GVF::is_pure_level(unsigned s) const
{
    return m_terms.empty() || (m_terms.begin()->first.level() == s && m_terms.rbegin()->first.level() == s);
}

GVF initial_field(const SpecPtr &spec)
{
    GVF f(spec);
    const std::size_t ell = spec->parameter_count();
    f.add_term(MultiIndex(ell), spec->eigenvalues());
    for (std::size_t q = 0; q < ell; ++q) {
        CoeffVector unit(spec->dimension());
        unit[spec->parameter(q).equation] = Scalar(1);
        f.add_term(MultiIndex::unit(ell, q), unit);
    }
    return f;
}

GVF level_slice(const GVF &f, unsigned s)
{
    GVF out(f.spec_ptr());
    for (const auto &[mu, theta] : f.terms()) {
        if (mu.level() == s) {
            out.add_term(mu, theta);
        } else if (mu.level() > s) {
            break;
        }
    }
    return out;
}

GVF truncate(const GVF &f, unsigned max_level)
{
    GVF out(f.spec_ptr());
    for (const auto &[mu, theta] : f.terms()) {
        if (mu.level() > max_level) {
            break;
        }
        out.add_term(mu, theta);
    }
    return out;
}

GVF restrict_support(const GVF &f, const std::function<bool(const MultiIndex &)> &keep)
{
    GVF out(f.spec_ptr());
    for (const auto &[mu, theta] : f.terms()) {
        if (keep(mu)) {
            out.add_term(mu, theta);
        }
    }
    return out;
}

} // namespace pdnf
