#pragma once

#include <functional>
#include <map>

#include "pdnf/algebra.hpp"

namespace pdnf
{

// Generalized vector field: a sparse series sum_mu theta_mu a^mu with
// theta_mu in F^n, bound to a system. Zero coefficient vectors are never
// stored, and a term whose exponent L(mu) has a -1 at position j carries a
// coefficient supported on component j only.
class GVF
{
public:
    using Terms = std::map<MultiIndex, CoeffVector, DegLexOrder>;

    explicit GVF(SpecPtr spec);

    const SystemSpec &spec() const { return *m_spec; }
    const SpecPtr &spec_ptr() const { return m_spec; }
    bool same_system(const GVF &other) const;

    const Terms &terms() const { return m_terms; }
    bool empty() const { return m_terms.empty(); }
    std::size_t size() const { return m_terms.size(); }

    // Zero vector when mu is not in the support.
    CoeffVector coefficient(const MultiIndex &mu) const;

    // Accumulates factor * theta at mu, dropping the term if it cancels.
    void add_term(const MultiIndex &mu, const CoeffVector &theta, const Scalar &factor = Scalar(1));
    void erase(const MultiIndex &mu) { m_terms.erase(mu); }

    GVF &operator+=(const GVF &other);
    GVF &operator-=(const GVF &other);
    GVF &operator*=(const Scalar &factor);
    friend GVF operator+(GVF a, const GVF &b) { return a += b; }
    friend GVF operator-(GVF a, const GVF &b) { return a -= b; }
    friend GVF operator*(GVF a, const Scalar &s) { return a *= s; }

    // Componentwise (Hadamard) scaling of every coefficient by v.
    GVF hadamard(const CoeffVector &v) const;

    // Largest |mu| present, or -1 when empty.
    int max_level() const;
    // True when every term has |mu| == s (vacuously for the empty field).
    bool is_pure_level(unsigned s) const;

    friend bool operator==(const GVF &a, const GVF &b) { return a.same_system(b) && a.m_terms == b.m_terms; }

private:
    void check_term(const MultiIndex &mu, const CoeffVector &theta) const;

    SpecPtr m_spec;
    Terms m_terms;
};

// lambda at mu = 0 plus a unit vector e_k at e_q for each parameter q of equation k.
GVF initial_field(const SpecPtr &spec);

// Terms with |mu| == s.
GVF level_slice(const GVF &f, unsigned s);

// Terms with |mu| <= max_level.
GVF truncate(const GVF &f, unsigned max_level);

// Terms whose multi-index satisfies keep.
GVF restrict_support(const GVF &f, const std::function<bool(const MultiIndex &)> &keep);

} // namespace pdnf
