#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pdnf/scalar.hpp"

namespace pdnf
{

// Exponent vector mu of a parameter monomial a^mu; one entry per parameter.
class MultiIndex
{
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t length) : m_entries(length, 0) {}
    explicit MultiIndex(std::vector<std::uint32_t> entries);
    MultiIndex(std::initializer_list<std::uint32_t> entries) : MultiIndex(std::vector<std::uint32_t>(entries)) {}

    static MultiIndex unit(std::size_t length, std::size_t q);

    std::size_t size() const { return m_entries.size(); }
    std::uint32_t operator[](std::size_t j) const { return m_entries[j]; }
    const std::vector<std::uint32_t> &entries() const { return m_entries; }

    // |mu|, the total parameter degree.
    std::uint32_t level() const { return m_level; }
    bool is_zero() const { return m_level == 0; }

    // Componentwise mu <= other, i.e. a^mu divides a^other.
    bool divides(const MultiIndex &other) const;

    MultiIndex &operator+=(const MultiIndex &other);
    friend MultiIndex operator+(MultiIndex a, const MultiIndex &b) { return a += b; }

    friend bool operator==(const MultiIndex &a, const MultiIndex &b) { return a.m_entries == b.m_entries; }
    friend auto operator<=>(const MultiIndex &a, const MultiIndex &b) { return a.m_entries <=> b.m_entries; }

    std::string to_string(char separator = ' ') const;

private:
    std::vector<std::uint32_t> m_entries;
    std::uint32_t m_level = 0;
};

// Degree-lexicographic order: lower level first, then lexicographically
// larger entries first, so (1,1,0) precedes (1,0,1) precedes (0,1,1).
struct DegLexOrder {
    bool operator()(const MultiIndex &a, const MultiIndex &b) const
    {
        if (a.level() != b.level()) {
            return a.level() < b.level();
        }
        return b < a;
    }
};

// Phase-space exponent m = L(mu); entries may be -1.
using PhaseExponent = std::vector<std::int64_t>;

std::int64_t degree(const PhaseExponent &m);

// n-vector of exact coefficients (theta_mu).
using CoeffVector = std::vector<Scalar>;

bool is_zero(const CoeffVector &v);
// dst += factor * src
void axpy(CoeffVector &dst, const Scalar &factor, const CoeffVector &src);
std::string to_string(const CoeffVector &v);

struct Parameter {
    std::string name;
    // Zero-based equation index k.
    std::size_t equation = 0;
    PhaseExponent exponent;

    friend bool operator==(const Parameter &, const Parameter &) = default;
};

// Raised for malformed system documents and invalid system data. `line()`
// is the 1-based document line, or 0 when the error is not tied to a line.
class SpecError : public std::runtime_error
{
public:
    SpecError(const std::string &what, int line = 0);
    int line() const { return m_line; }

private:
    int m_line;
};

// The family x_k' = lambda_k x_k + x_k * sum_q a_q x^{i_q} with diagonal
// linear part. The parameter order is the coordinate order of every
// MultiIndex bound to this system.
class SystemSpec
{
public:
    SystemSpec(std::vector<Scalar> eigenvalues, std::vector<Parameter> parameters);

    std::size_t dimension() const { return m_eigenvalues.size(); }
    std::size_t parameter_count() const { return m_parameters.size(); }
    const std::vector<Scalar> &eigenvalues() const { return m_eigenvalues; }
    const std::vector<Parameter> &parameters() const { return m_parameters; }
    const Parameter &parameter(std::size_t q) const { return m_parameters.at(q); }
    // Position of the named parameter, or parameter_count() if absent.
    std::size_t index_of(std::string_view name) const;

    // Rows are the parameter exponents, in parameter order.
    std::vector<PhaseExponent> exponent_matrix() const;

    // Copy with parameter q removed.
    SystemSpec without_parameter(std::size_t q) const;

    friend bool operator==(const SystemSpec &, const SystemSpec &) = default;

private:
    std::vector<Scalar> m_eigenvalues;
    std::vector<Parameter> m_parameters;
};

using SpecPtr = std::shared_ptr<const SystemSpec>;

SystemSpec parse_system(std::string_view text);
SystemSpec load_system(const std::filesystem::path &path);
// Inverse of parse_system.
std::string to_text(const SystemSpec &spec);

// L(mu) = mu * L~.
PhaseExponent exponent_map(const SystemSpec &spec, const MultiIndex &mu);

// <L(mu), lambda>; zero exactly when the terms carried by a^mu are resonant.
Scalar resonance_weight(const SystemSpec &spec, const MultiIndex &mu);

// Parses "c1,...,cl" (commas or whitespace) into a MultiIndex of the given length.
MultiIndex parse_multi_index(std::string_view text, std::size_t length);

} // namespace pdnf
