#pragma once

// Classical normal-form machinery on plain polynomial vector fields with
// numeric (exact rational) parameter values. Used to cross-check the
// generalized-vector-field engine.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pdnf/normalizer.hpp"

namespace pdnf
{

// e_component * x^exponent.
struct PhaseMonomial {
    std::size_t component = 0;
    std::vector<std::uint32_t> exponent;

    unsigned degree() const;
    std::string to_string() const;

    friend bool operator==(const PhaseMonomial &, const PhaseMonomial &) = default;
};

// Degree first, then component, then lexicographically larger exponent first.
struct PhaseMonomialOrder {
    bool operator()(const PhaseMonomial &a, const PhaseMonomial &b) const;
};

// Polynomial vector field on F^n as a sparse map monomial -> coefficient.
class PVF
{
public:
    using Terms = std::map<PhaseMonomial, Scalar, PhaseMonomialOrder>;

    explicit PVF(std::size_t dimension) : m_dimension(dimension) {}

    std::size_t dimension() const { return m_dimension; }
    const Terms &terms() const { return m_terms; }
    bool empty() const { return m_terms.empty(); }
    std::size_t size() const { return m_terms.size(); }

    Scalar coefficient(const PhaseMonomial &m) const;
    void add_term(const PhaseMonomial &m, const Scalar &c);

    PVF &operator+=(const PVF &other);
    PVF &operator-=(const PVF &other);
    PVF &operator*=(const Scalar &factor);
    friend PVF operator+(PVF a, const PVF &b) { return a += b; }
    friend PVF operator-(PVF a, const PVF &b) { return a -= b; }

    // Largest monomial degree, or -1 when empty.
    int max_degree() const;
    PVF degree_slice(unsigned degree) const;
    PVF truncated(unsigned max_degree) const;

    friend bool operator==(const PVF &, const PVF &) = default;

private:
    std::size_t m_dimension;
    Terms m_terms;
};

// Parameter name -> value.
using Assignment = std::map<std::string, Scalar, std::less<>>;

// lambda * x + F(sigma, x): parameter q of equation k with exponent i
// contributes sigma(q) at (k, i + e_k).
PVF instantiate(const SystemSpec &spec, const Assignment &sigma);

// Expands each term theta_mu a^mu into (theta_mu . x) sigma^mu x^{L(mu)}.
PVF evaluate(const GVF &f, const Assignment &sigma);

// D(v) w - D(w) v, i.e. [w, v]. Products above max_degree are skipped
// when a bound is given.
PVF pvf_bracket(const PVF &v, const PVF &w, std::optional<unsigned> max_degree = std::nullopt);

// sum_i (1/i!) (ad generator)^i field, truncated at max_degree. Every
// generator monomial must have degree >= 2.
PVF lie_transform(const PVF &generator, const PVF &field, unsigned max_degree);

struct ClassicalNormalForm {
    // generators[j - 2] normalizes degree j.
    std::vector<PVF> generators;
    PVF normal_form;
};

// Degree-by-degree normalization with generators free of resonant terms.
// The linear part must be diagonal.
ClassicalNormalForm classical_normalize(const PVF &field, unsigned max_degree);

// <alpha, lambda> - lambda_i
Scalar classical_weight(const PhaseMonomial &m, const std::vector<Scalar> &lambda);

struct ConjugacyReport {
    bool passed = true;
    unsigned max_degree = 0;
    std::optional<PhaseMonomial> mismatch;
    Scalar expected;
    Scalar actual;

    std::string describe() const;
};

// Applies the recorded generators, as Lie transforms, to the instantiated
// system and compares with the evaluated normal form through phase degree
// level + 1.
ConjugacyReport conjugacy_check(const SystemSpec &spec, const NormalFormResult &result, const Assignment &sigma,
                                unsigned level);

// First monomial (in PhaseMonomialOrder) where the fields differ through max_degree.
std::optional<PhaseMonomial> first_difference(const PVF &a, const PVF &b, unsigned max_degree);

// Random values p/q with |p| <= max_numerator and 1 <= q <= max_denominator.
Assignment random_assignment(const SystemSpec &spec, std::mt19937_64 &rng, int max_numerator = 9,
                             int max_denominator = 9);

} // namespace pdnf
