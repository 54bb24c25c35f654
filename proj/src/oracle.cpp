#include "pdnf/oracle.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pdnf
{

unsigned PhaseMonomial::degree() const
{
    return std::accumulate(exponent.begin(), exponent.end(), 0U);
}

std::string PhaseMonomial::to_string() const
{
    std::ostringstream out;
    out << "e" << component + 1 << " x^(";
    for (std::size_t j = 0; j < exponent.size(); ++j) {
        out << (j != 0 ? "," : "") << exponent[j];
    }
    out << ")";
    return out.str();
}

bool PhaseMonomialOrder::operator()(const PhaseMonomial &a, const PhaseMonomial &b) const
{
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) {
        return da < db;
    }
    if (a.component != b.component) {
        return a.component < b.component;
    }
    return b.exponent < a.exponent;
}

Scalar PVF::coefficient(const PhaseMonomial &m) const
{
    const auto it = m_terms.find(m);
    return it == m_terms.end() ? Scalar() : it->second;
}

void PVF::add_term(const PhaseMonomial &m, const Scalar &c)
{
    if (m.component >= m_dimension || m.exponent.size() != m_dimension) {
        throw std::invalid_argument("monomial does not fit a " + std::to_string(m_dimension) + "-dimensional field");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

PVF &PVF::operator+=(const PVF &other)
{
    if (other.m_dimension != m_dimension) {
        throw std::invalid_argument("vector field dimension mismatch");
    }
    for (const auto &[m, c] : other.m_terms) {
        add_term(m, c);
    }
    return *this;
}

PVF &PVF::operator-=(const PVF &other)
{
    if (other.m_dimension != m_dimension) {
        throw std::invalid_argument("vector field dimension mismatch");
    }
    for (const auto &[m, c] : other.m_terms) {
        add_term(m, -c);
    }
    return *this;
}

PVF &PVF::operator*=(const Scalar &factor)
{
    if (factor.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[m, c] : m_terms) {
        c *= factor;
    }
    return *this;
}

int PVF::max_degree() const
{
    return m_terms.empty() ? -1 : static_cast<int>(m_terms.rbegin()->first.degree());
}

PVF PVF::degree_slice(unsigned degree) const
{
    PVF out(m_dimension);
    for (const auto &[m, c] : m_terms) {
        if (m.degree() == degree) {
            out.m_terms.emplace(m, c);
        }
    }
    return out;
}

PVF PVF::truncated(unsigned max_degree) const
{
    PVF out(m_dimension);
    for (const auto &[m, c] : m_terms) {
        if (m.degree() > max_degree) {
            break;
        }
        out.m_terms.emplace(m, c);
    }
    return out;
}

namespace
{

Scalar lookup(const Assignment &sigma, const std::string &name)
{
    const auto it = sigma.find(name);
    if (it == sigma.end()) {
        throw std::invalid_argument("no value assigned to parameter '" + name + "'");
    }
    return it->second;
}

// D(a) b, optionally skipping products above max_degree.
PVF jacobian_apply(const PVF &a, const PVF &b, std::optional<unsigned> max_degree)
{
    PVF out(a.dimension());
    for (const auto &[ma, ca] : a.terms()) {
        const unsigned da = ma.degree();
        if (da == 0) {
            continue;
        }
        for (const auto &[mb, cb] : b.terms()) {
            if (max_degree && da + mb.degree() - 1 > *max_degree) {
                break;
            }
            const auto j = mb.component;
            if (ma.exponent[j] == 0) {
                continue;
            }
            PhaseMonomial m{ma.component, ma.exponent};
            m.exponent[j] -= 1;
            for (std::size_t k = 0; k < m.exponent.size(); ++k) {
                m.exponent[k] += mb.exponent[k];
            }
            out.add_term(m, ca * cb * Scalar(static_cast<std::int64_t>(ma.exponent[j])));
        }
    }
    return out;
}

} // namespace

PVF instantiate(const SystemSpec &spec, const Assignment &sigma)
{
    const std::size_t n = spec.dimension();
    PVF out(n);
    for (std::size_t k = 0; k < n; ++k) {
        PhaseMonomial m{k, std::vector<std::uint32_t>(n, 0)};
        m.exponent[k] = 1;
        out.add_term(m, spec.eigenvalues()[k]);
    }
    for (const auto &p : spec.parameters()) {
        const Scalar value = lookup(sigma, p.name);
        PhaseMonomial m{p.equation, std::vector<std::uint32_t>(n, 0)};
        for (std::size_t j = 0; j < n; ++j) {
            m.exponent[j] = static_cast<std::uint32_t>(p.exponent[j] + (j == p.equation ? 1 : 0));
        }
        out.add_term(m, value);
    }
    return out;
}

PVF evaluate(const GVF &f, const Assignment &sigma)
{
    const SystemSpec &spec = f.spec();
    const std::size_t n = spec.dimension();
    std::vector<Scalar> values;
    values.reserve(spec.parameter_count());
    for (const auto &p : spec.parameters()) {
        values.push_back(lookup(sigma, p.name));
    }

    PVF out(n);
    for (const auto &[mu, theta] : f.terms()) {
        Scalar monomial(1);
        for (std::size_t q = 0; q < mu.size(); ++q) {
            if (mu[q] != 0) {
                monomial *= pow(values[q], mu[q]);
            }
        }
        if (monomial.is_zero()) {
            continue;
        }
        const auto m = exponent_map(spec, mu);
        for (std::size_t j = 0; j < n; ++j) {
            if (theta[j].is_zero()) {
                continue;
            }
            PhaseMonomial pm{j, std::vector<std::uint32_t>(n, 0)};
            for (std::size_t k = 0; k < n; ++k) {
                const auto e = m[k] + (k == j ? 1 : 0);
                if (e < 0) {
                    throw std::logic_error("term at mu = (" + mu.to_string(',') + ") expands to a negative exponent");
                }
                pm.exponent[k] = static_cast<std::uint32_t>(e);
            }
            out.add_term(pm, theta[j] * monomial);
        }
    }
    return out;
}

PVF pvf_bracket(const PVF &v, const PVF &w, std::optional<unsigned> max_degree)
{
    if (v.dimension() != w.dimension()) {
        throw std::invalid_argument("bracket operands have different dimensions");
    }
    return jacobian_apply(v, w, max_degree) - jacobian_apply(w, v, max_degree);
}

PVF lie_transform(const PVF &generator, const PVF &field, unsigned max_degree)
{
    if (!generator.empty() && generator.terms().begin()->first.degree() < 2) {
        throw std::invalid_argument("Lie transform generator must have degree >= 2");
    }
    PVF result = field.truncated(max_degree);
    PVF term = result;
    for (std::int64_t i = 1; !term.empty() && !generator.empty(); ++i) {
        term = pvf_bracket(term, generator, max_degree);
        term *= Scalar(1, i);
        result += term;
    }
    return result;
}

Scalar classical_weight(const PhaseMonomial &m, const std::vector<Scalar> &lambda)
{
    Scalar w = -lambda.at(m.component);
    for (std::size_t j = 0; j < m.exponent.size(); ++j) {
        if (m.exponent[j] != 0) {
            w += Scalar(static_cast<std::int64_t>(m.exponent[j])) * lambda[j];
        }
    }
    return w;
}

ClassicalNormalForm classical_normalize(const PVF &field, unsigned max_degree)
{
    if (max_degree < 2) {
        throw std::invalid_argument("classical normalization needs max degree >= 2");
    }
    const std::size_t n = field.dimension();
    std::vector<Scalar> lambda(n);
    for (const auto &[m, c] : field.terms()) {
        if (m.degree() == 0) {
            throw std::invalid_argument("field has a constant term");
        }
        if (m.degree() > 1) {
            break;
        }
        if (m.exponent[m.component] != 1) {
            throw std::invalid_argument("linear part is not diagonal");
        }
        lambda[m.component] = c;
    }

    ClassicalNormalForm out{{}, field.truncated(max_degree)};
    for (unsigned j = 2; j <= max_degree; ++j) {
        PVF generator(n);
        const PVF slice = out.normal_form.degree_slice(j);
        for (const auto &[m, c] : slice.terms()) {
            const Scalar beta = classical_weight(m, lambda);
            if (!beta.is_zero()) {
                generator.add_term(m, c / beta);
            }
        }
        if (!generator.empty()) {
            out.normal_form = lie_transform(generator, out.normal_form, max_degree);
        }
        out.generators.push_back(std::move(generator));
    }
    return out;
}

std::optional<PhaseMonomial> first_difference(const PVF &a, const PVF &b, unsigned max_degree)
{
    const PVF diff = (a - b).truncated(max_degree);
    if (diff.empty()) {
        return std::nullopt;
    }
    return diff.terms().begin()->first;
}

std::string ConjugacyReport::describe() const
{
    if (passed) {
        return "conjugacy holds through degree " + std::to_string(max_degree);
    }
    std::ostringstream out;
    out << "conjugacy fails at " << (mismatch ? mismatch->to_string() : std::string("?")) << ": transformed field has "
        << expected << ", normal form has " << actual;
    return out.str();
}

ConjugacyReport conjugacy_check(const SystemSpec &spec, const NormalFormResult &result, const Assignment &sigma,
                                unsigned level)
{
    const unsigned max_degree = level + 1;
    PVF transformed = instantiate(spec, sigma).truncated(max_degree);
    for (std::size_t s = 0; s < result.generators.size() && s < level; ++s) {
        const PVF generator = evaluate(result.generators[s], sigma).truncated(max_degree);
        if (!generator.empty()) {
            transformed = lie_transform(generator, transformed, max_degree);
        }
    }
    const PVF normal_form = evaluate(result.alpha, sigma).truncated(max_degree);

    ConjugacyReport report;
    report.max_degree = max_degree;
    report.mismatch = first_difference(transformed, normal_form, max_degree);
    if (report.mismatch) {
        report.passed = false;
        report.expected = transformed.coefficient(*report.mismatch);
        report.actual = normal_form.coefficient(*report.mismatch);
    }
    return report;
}

Assignment random_assignment(const SystemSpec &spec, std::mt19937_64 &rng, int max_numerator, int max_denominator)
{
    std::uniform_int_distribution<int> num(-max_numerator, max_numerator);
    std::uniform_int_distribution<int> den(1, max_denominator);
    Assignment sigma;
    for (const auto &p : spec.parameters()) {
        const int p_value = num(rng);
        const int q_value = den(rng);
        sigma.emplace(p.name, Scalar(p_value, q_value));
    }
    return sigma;
}

} // namespace pdnf
