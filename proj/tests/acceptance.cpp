// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "pdnf/report.hpp"
#include "support.hpp"

using namespace pdnf;
using namespace pdnf::testing;

namespace
{

constexpr double end_to_end_limit_s = 1.0;
constexpr double bracket_limit_s = 10.0;
constexpr double conjugacy_limit_s = 30.0;

// Every normal form produced anywhere in the run, for the purity criterion.
std::vector<GVF> emitted;

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool condition, const std::string &what)
    {
        if (!condition && passed) {
            passed = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double s)
{
    std::ostringstream out;
    out.precision(3);
    out << std::fixed << s << " s";
    return out.str();
}

NormalFormResult normalize_recorded(const SpecPtr &spec, unsigned level)
{
    auto result = normalize(spec, level);
    emitted.push_back(result.alpha);
    for (const auto &[k, g] : result.orders) {
        emitted.push_back(g);
    }
    return result;
}

Outcome end_to_end()
{
    Outcome o;
    const auto spec = saddle_spec();
    const auto start = std::chrono::steady_clock::now();
    const auto result = normalize_recorded(spec, 4);
    const std::string report = format_report(result, EmitMode::orders);
    const double elapsed = seconds_since(start);

    GVF expected = from_terms(spec, saddle_normal_form());
    o.require(result.orders.count(2) == 0, "g2 is not zero");
    o.require(result.orders.count(4) == 0, "g4 is not zero");
    o.require(result.orders.count(3) == 1 && result.orders.at(3) == level_slice(expected, 2), "g3 differs");
    o.require(result.orders.count(5) == 1
                  && result.orders.at(5) == level_slice(expected, 3) + level_slice(expected, 4),
              "g5 differs");
    expected.add_term(MultiIndex(6), cv({"1", "-1"}));
    o.require(result.alpha == expected, "alpha differs");
    o.require(report.find("order 3\nmu 1 1 0 0 0 0 | L 1 1 | coeff -1 0\n") != std::string::npos,
              "report lacks the order-3 section");
    o.require(elapsed < end_to_end_limit_s, "took " + fixed(elapsed));
    if (o.passed) {
        o.detail = "g2 = g4 = 0, g3 (3 terms) and g5 (7 terms) exact, " + fixed(elapsed);
    }
    return o;
}

Outcome intermediate_values()
{
    Outcome o;
    const auto spec = saddle_spec();
    const GVF f = initial_field(spec);
    const GVF alpha0 = level_slice(f, 0);
    const GVF alpha1 = level_slice(f, 1);
    const auto split = homological_split(alpha1);
    const GVF &eta = split.generator;

    o.require(split.resonant.empty(), "level-1 slice has resonant terms");
    o.require(eta == from_terms(spec, {
                                          {{1, 0, 0, 0, 0, 0}, cv({"1", "0"})},
                                          {{0, 1, 0, 0, 0, 0}, cv({"-1", "0"})},
                                          {{0, 0, 1, 0, 0, 0}, cv({"-1/4", "0"})},
                                          {{0, 0, 0, 1, 0, 0}, cv({"0", "-1/2"})},
                                          {{0, 0, 0, 0, 1, 0}, cv({"0", "1"})},
                                          {{0, 0, 0, 0, 0, 1}, cv({"0", "-1"})},
                                      }),
              "eta1 differs");

    const GVF ad_alpha1 = bracket(eta, alpha1);
    const GVF expected = from_terms(spec, {
                                              {{1, 1, 0, 0, 0, 0}, cv({"-2", "0"})},
                                              {{1, 0, 1, 0, 0, 0}, cv({"-5/2", "0"})},
                                              {{0, 1, 1, 0, 0, 0}, cv({"3/4", "0"})},
                                              {{0, 1, 0, 1, 0, 0}, cv({"1/2", "0"})},
                                              {{0, 1, 0, 0, 1, 0}, cv({"2", "-2"})},
                                              {{0, 0, 1, 1, 0, 0}, cv({"-3/4", "0"})},
                                              {{0, 0, 1, 0, 1, 0}, cv({"15/4", "-5/4"})},
                                              {{0, 0, 1, 0, 0, 1}, cv({"-9/4", "0"})},
                                              {{0, 0, 0, 1, 1, 0}, cv({"0", "3"})},
                                              {{0, 0, 0, 1, 0, 1}, cv({"0", "-1/2"})},
                                              {{0, 0, 0, 0, 1, 1}, cv({"0", "2"})},
                                          });
    o.require(ad_alpha1 == expected, "(ad eta1) alpha1 differs");

    const GVF halved = bracket(eta, bracket(eta, alpha0)) * Scalar(1, 2) + ad_alpha1;
    o.require(halved == expected * Scalar(1, 2), "halved level-2 combination differs");
    o.require(halved.coefficient({1, 1, 0, 0, 0, 0}) == cv({"-1", "0"}), "halved coefficient at [1,1,0,0,0,0]");
    o.require(level_slice(apply_exp_ad(eta, f, 2), 2) == halved, "exp(ad eta1) level 2 differs");
    o.require((bracket(eta, alpha0) + alpha1).empty(), "(ad eta1) alpha0 + alpha1 != 0");
    if (o.passed) {
        o.detail = "eta1, 11 terms of (ad eta1) alpha1, halved combination, cancellation";
    }
    return o;
}

Outcome bracket_oracle()
{
    Outcome o;
    std::mt19937_64 rng(1001);
    const auto start = std::chrono::steady_clock::now();
    int pairs = 0;
    for (int trial = 0; pairs < 150 && trial < 1000; ++trial) {
        const auto spec = random_spec(rng, 1 + trial % 3, 1, 6);
        const GVF f = random_term(rng, spec, 1 + trial % 3);
        const GVF g = random_term(rng, spec, 1 + (trial / 3) % 3);
        if (f.empty() || g.empty()) {
            continue;
        }
        ++pairs;
        const Assignment sigma = random_assignment(*spec, rng);
        o.require(evaluate(bracket(f, g), sigma) == pvf_bracket(evaluate(g, sigma), evaluate(f, sigma)),
                  "mismatch on pair " + std::to_string(pairs) + ": system\n" + to_text(*spec));
    }
    const double elapsed = seconds_since(start);
    o.require(pairs >= 100, "only " + std::to_string(pairs) + " pairs");
    o.require(elapsed < bracket_limit_s, "took " + fixed(elapsed));
    if (o.passed) {
        o.detail = std::to_string(pairs) + " pairs exact, " + fixed(elapsed);
    }
    return o;
}

Outcome lie_laws()
{
    Outcome o;
    std::mt19937_64 rng(1002);
    int triples = 0;
    for (int trial = 0; triples < 60 && trial < 1000; ++trial) {
        const auto spec = random_spec(rng, 1 + trial % 3, 1, 6);
        const GVF f = random_field(rng, spec, 1 + trial % 3, 2);
        const GVF g = random_field(rng, spec, 1 + (trial / 3) % 3, 2);
        const GVF h = random_field(rng, spec, 1 + (trial / 9) % 3, 2);
        if (f.empty() || g.empty() || h.empty()) {
            continue;
        }
        ++triples;
        o.require(bracket(f, g) == bracket(g, f) * Scalar(-1), "antisymmetry fails");
        o.require((bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g))).empty(),
                  "Jacobi identity fails");
    }
    o.require(triples >= 50, "only " + std::to_string(triples) + " triples");
    if (o.passed) {
        o.detail = std::to_string(triples) + " triples, antisymmetry and Jacobi exact";
    }
    return o;
}

Outcome conjugacy()
{
    Outcome o;
    std::mt19937_64 rng(1003);
    const auto start = std::chrono::steady_clock::now();

    const auto saddle = saddle_spec();
    const auto saddle_result = normalize_recorded(saddle, 4);
    for (int k = 0; k < 3; ++k) {
        const auto report = conjugacy_check(*saddle, saddle_result, random_assignment(*saddle, rng), 4);
        o.require(report.passed, "saddle: " + report.describe());
    }

    // Only systems with a nonzero resonant part count.
    int specs = 0;
    for (int trial = 0; specs < 8 && trial < 500; ++trial) {
        const auto spec = random_spec(rng, 2, 1, 4);
        const auto result = normalize_recorded(spec, 3);
        if (result.alpha.size() < 2) {
            continue;
        }
        ++specs;
        for (int k = 0; k < 3; ++k) {
            const auto report = conjugacy_check(*spec, result, random_assignment(*spec, rng), 3);
            o.require(report.passed, "random system:\n" + to_text(*spec) + report.describe());
        }
    }
    o.require(specs >= 5, "only " + std::to_string(specs) + " random systems");

    auto broken = saddle_result;
    broken.alpha.add_term({1, 0, 0, 1, 1, 0}, cv({"0", "1/3"}));
    const auto report = conjugacy_check(*saddle, broken, nonzero_assignment(*saddle, rng), 4);
    o.require(!report.passed && report.mismatch.has_value(), "perturbation went unnoticed");

    const double elapsed = seconds_since(start);
    o.require(elapsed < conjugacy_limit_s, "took " + fixed(elapsed));
    if (o.passed) {
        o.detail = "saddle m=4 and " + std::to_string(specs)
                   + " random systems with resonant terms x 3 assignments, perturbation detected at " + report.mismatch->to_string()
                   + ", " + fixed(elapsed);
    }
    return o;
}

Outcome classical_window()
{
    Outcome o;
    const auto spec = saddle_spec();
    const auto result = normalize_recorded(spec, 4);
    GVF reconstructed(spec);
    reconstructed.add_term(MultiIndex(6), spec->eigenvalues());
    for (const auto &[k, g] : result.orders) {
        reconstructed += g;
    }
    std::mt19937_64 rng(1004);
    for (int k = 0; k < 3; ++k) {
        const Assignment sigma = random_assignment(*spec, rng);
        const auto classical = classical_normalize(instantiate(*spec, sigma), 5);
        const auto diff = first_difference(classical.normal_form, evaluate(reconstructed, sigma), 5);
        o.require(!diff, "differs at " + (diff ? diff->to_string() : std::string()));
    }
    if (o.passed) {
        o.detail = "agree through degree 5 at 3 assignments; degree 7 not compared";
    }
    return o;
}

Outcome locality()
{
    Outcome o;
    std::mt19937_64 rng(1005);
    int pairs = 0;
    int removals = 0;
    for (int trial = 0; pairs < 25 && trial < 500; ++trial) {
        const auto spec = random_spec(rng, 2, 2, 4);
        const auto targets = resonant_multi_indices(*spec, 3);
        if (targets.empty()) {
            continue;
        }
        const MultiIndex kappa = targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)];
        ++pairs;
        const auto value = coefficient_at(spec, kappa);
        const auto full = normalize_recorded(spec, kappa.level());
        o.require(value == full.alpha.coefficient(kappa), "restricted run differs at (" + kappa.to_string(',') + ")");
        for (std::size_t q = 0; q < spec->parameter_count(); ++q) {
            if (kappa[q] != 0) {
                continue;
            }
            std::vector<std::uint32_t> entries = kappa.entries();
            entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(q));
            const auto smaller = std::make_shared<const SystemSpec>(spec->without_parameter(q));
            o.require(coefficient_at(smaller, MultiIndex(entries)) == value,
                      "removing parameter " + spec->parameter(q).name + " changed (" + kappa.to_string(',') + ")");
            ++removals;
        }
    }
    o.require(pairs >= 20, "only " + std::to_string(pairs) + " pairs");
    if (o.passed) {
        o.detail = std::to_string(pairs) + " pairs, " + std::to_string(removals) + " parameter removals";
    }
    return o;
}

Outcome determinism()
{
    Outcome o;
    const auto spec = saddle_spec();
    const auto targets = resonant_multi_indices(*spec, 4);
    const auto one = normalize_targets(spec, targets, 1);
    const auto two = normalize_targets(spec, targets, 2);
    const auto eight = normalize_targets(spec, targets, 8);
    const auto again = normalize_targets(spec, targets, 8);

    GVF assembled(spec);
    assembled.add_term(MultiIndex(6), spec->eigenvalues());
    for (const auto &[mu, outcome] : one) {
        o.require(outcome.value.has_value(), "target (" + mu.to_string(',') + ") failed: " + outcome.error);
        if (!outcome.value) {
            continue;
        }
        o.require(two.at(mu).value == outcome.value && eight.at(mu).value == outcome.value
                      && again.at(mu).value == outcome.value,
                  "worker counts disagree at (" + mu.to_string(',') + ")");
        assembled.add_term(mu, *outcome.value);
    }
    o.require(one.size() == two.size() && one.size() == eight.size(), "result sizes differ");
    GVF expected = from_terms(spec, saddle_normal_form());
    expected.add_term(MultiIndex(6), cv({"1", "-1"}));
    o.require(assembled == expected, "targets disagree with the end-to-end normal form");
    emitted.push_back(assembled);
    if (o.passed) {
        o.detail = std::to_string(one.size()) + " resonant targets identical for 1, 2, 8 workers";
    }
    return o;
}

Outcome purity()
{
    Outcome o;
    std::size_t terms = 0;
    for (const auto &f : emitted) {
        o.require(resonant_only(f), "non-resonant term emitted");
        terms += f.size();
    }
    o.require(!emitted.empty(), "nothing was emitted");
    if (o.passed) {
        o.detail = std::to_string(emitted.size()) + " fields, " + std::to_string(terms) + " terms resonant";
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"six-parameter saddle end-to-end", end_to_end},
        {"intermediate values", intermediate_values},
        {"bracket oracle equivalence", bracket_oracle},
        {"Lie-algebra laws", lie_laws},
        {"conjugacy", conjugacy},
        {"classical agreement window", classical_window},
        {"locality", locality},
        {"determinism", determinism},
        {"resonance purity", purity},
    };

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += o.passed ? 0 : 1;
        std::cout << "criterion " << k + 1 << " (" << criteria[k].first << "): " << (o.passed ? "PASS" : "FAIL")
                  << " - " << o.detail << '\n';
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
