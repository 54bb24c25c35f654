#pragma once

#include <initializer_list>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pdnf/oracle.hpp"
#include "pdnf/parallel.hpp"

namespace pdnf::testing
{

inline const char *const saddle_system_text = R"(n 2
lambda 1 -1
param a1_10  eq 1 exp 1 0
param a1_01  eq 1 exp 0 1
param a1_m13 eq 1 exp -1 3
param a2_02  eq 2 exp 0 2
param a2_10  eq 2 exp 1 0
param a2_01  eq 2 exp 0 1
)";

inline SpecPtr saddle_spec()
{
    return std::make_shared<const SystemSpec>(parse_system(saddle_system_text));
}

inline SpecPtr make_spec(std::string_view text)
{
    return std::make_shared<const SystemSpec>(parse_system(text));
}

inline CoeffVector cv(std::initializer_list<const char *> entries)
{
    CoeffVector out;
    for (const char *e : entries) {
        out.push_back(Scalar::parse(e));
    }
    return out;
}

struct ExpectedTerm {
    MultiIndex mu;
    CoeffVector coeff;
};

// The level 2..4 normal-form terms of the six-parameter saddle.
inline std::vector<ExpectedTerm> saddle_normal_form()
{
    return {
        {{1, 1, 0, 0, 0, 0}, cv({"-1", "0"})},  {{0, 1, 0, 0, 1, 0}, cv({"1", "-1"})},
        {{0, 0, 0, 0, 1, 1}, cv({"0", "1"})},   {{1, 0, 0, 1, 1, 0}, cv({"0", "1"})},
        {{0, 0, 0, 1, 2, 0}, cv({"0", "2"})},   {{1, 2, 0, 0, 1, 0}, cv({"1", "0"})},
        {{1, 1, 0, 0, 1, 1}, cv({"1", "-1"})},  {{0, 2, 0, 0, 2, 0}, cv({"-2", "2"})},
        {{0, 1, 0, 0, 2, 1}, cv({"0", "-1"})},
    };
}

inline GVF from_terms(const SpecPtr &spec, const std::vector<ExpectedTerm> &terms)
{
    GVF out(spec);
    for (const auto &t : terms) {
        out.add_term(t.mu, t.coeff);
    }
    return out;
}

inline Scalar random_rational(std::mt19937_64 &rng, int max_abs = 5, bool nonzero = false)
{
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, 4);
    int p = num(rng);
    while (nonzero && p == 0) {
        p = num(rng);
    }
    return Scalar(p, den(rng));
}

inline std::vector<Scalar> random_eigenvalues(std::mt19937_64 &rng, std::size_t n)
{
    const Scalar i = Scalar::parse("i");
    std::vector<std::vector<Scalar>> choices;
    if (n == 2) {
        choices = {{1, -1}, {1, -2}, {2, -1}, {i, -i}};
    } else if (n == 3) {
        choices = {{1, -1, 2}, {1, 2, -3}, {i, -i, 1}, {1, -1, 1}};
    } else {
        return std::vector<Scalar>(n, Scalar(1));
    }
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    return choices[pick(rng)];
}

// Random valid system: each row may hold a -1 only at its own equation and
// has phase degree between 1 and 3.
inline SpecPtr random_spec(std::mt19937_64 &rng, std::size_t n, std::size_t min_params, std::size_t max_params)
{
    std::uniform_int_distribution<std::size_t> count(min_params, max_params);
    std::uniform_int_distribution<std::size_t> equation(0, n - 1);
    std::uniform_int_distribution<int> own(-1, 2);
    std::uniform_int_distribution<int> other(0, 2);
    const std::size_t ell = count(rng);
    std::vector<Parameter> params;
    for (std::size_t q = 0; q < ell; ++q) {
        Parameter p;
        p.name = "p" + std::to_string(q + 1);
        p.equation = equation(rng);
        do {
            p.exponent.assign(n, 0);
            for (std::size_t j = 0; j < n; ++j) {
                p.exponent[j] = j == p.equation ? own(rng) : other(rng);
            }
        } while (degree(p.exponent) < 1 || degree(p.exponent) > 3);
        params.push_back(std::move(p));
    }
    return std::make_shared<const SystemSpec>(random_eigenvalues(rng, n), std::move(params));
}

inline MultiIndex random_multi_index(std::mt19937_64 &rng, std::size_t ell, unsigned level)
{
    std::vector<std::uint32_t> entries(ell, 0);
    std::uniform_int_distribution<std::size_t> pick(0, ell - 1);
    for (unsigned k = 0; k < level; ++k) {
        ++entries[pick(rng)];
    }
    return MultiIndex(std::move(entries));
}

// Single random term of the given level, respecting the support rule. Gives
// an empty field if no admissible multi-index turns up.
inline GVF random_term(std::mt19937_64 &rng, const SpecPtr &spec, unsigned level)
{
    const std::size_t n = spec->dimension();
    for (int attempt = 0; attempt < 50; ++attempt) {
        const MultiIndex mu = random_multi_index(rng, spec->parameter_count(), level);
        const auto m = exponent_map(*spec, mu);
        std::vector<std::size_t> negative;
        bool bad = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (m[j] < -1) {
                bad = true;
            } else if (m[j] == -1) {
                negative.push_back(j);
            }
        }
        if (bad || negative.size() > 1) {
            continue;
        }
        CoeffVector theta(n);
        if (negative.empty()) {
            for (auto &c : theta) {
                c = random_rational(rng);
            }
            if (is_zero(theta)) {
                theta[0] = Scalar(1);
            }
        } else {
            theta[negative.front()] = random_rational(rng, 5, true);
        }
        GVF out(spec);
        out.add_term(mu, theta);
        return out;
    }
    return GVF(spec);
}

// Sum of a few random terms of one level.
inline GVF random_field(std::mt19937_64 &rng, const SpecPtr &spec, unsigned level, int terms)
{
    GVF out(spec);
    for (int k = 0; k < terms; ++k) {
        out += random_term(rng, spec, level);
    }
    return out;
}

inline Assignment nonzero_assignment(const SystemSpec &spec, std::mt19937_64 &rng)
{
    Assignment sigma = random_assignment(spec, rng);
    for (auto &[name, value] : sigma) {
        if (value.is_zero()) {
            value = Scalar(1);
        }
    }
    return sigma;
}

inline bool resonant_only(const GVF &f)
{
    for (const auto &[mu, theta] : f.terms()) {
        if (!mu.is_zero() && !resonance_weight(f.spec(), mu).is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace pdnf::testing
