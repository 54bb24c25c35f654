// pdnf: command-line front end for parametric Poincare-Dulac normal forms.
//
//   pdnf normalize --input F (--level M | --order R) [--output G] [--threads T] [--emit levels|orders|both]
//   pdnf coeff     --input F --mu "c1,...,cl" [--mu ...] [--threads T]
//   pdnf verify    --input F --level M [--seed S] [--trials K]
//
// Exit status: 0 success, 1 invalid input, 2 verification failure, 64 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "pdnf/oracle.hpp"
#include "pdnf/parallel.hpp"
#include "pdnf/report.hpp"

namespace
{

constexpr int exit_invalid = 1;
constexpr int exit_verify = 2;
constexpr int exit_usage = 64;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

pdnf::SpecPtr load(const std::string &path)
{
    try {
        return std::make_shared<const pdnf::SystemSpec>(pdnf::load_system(path));
    } catch (const pdnf::SpecError &e) {
        throw InputError("--input " + path + ": " + e.what());
    }
}

pdnf::NormalFormResult normalize_with_threads(const pdnf::SpecPtr &spec, unsigned level, unsigned threads)
{
    if (threads <= 1) {
        return pdnf::normalize(spec, level);
    }
    const auto targets = pdnf::resonant_multi_indices(*spec, level);
    const auto outcomes = pdnf::normalize_targets(spec, targets, threads);
    pdnf::GVF alpha(spec);
    alpha.add_term(pdnf::MultiIndex(spec->parameter_count()), spec->eigenvalues());
    for (const auto &[mu, outcome] : outcomes) {
        if (!outcome.value) {
            throw std::runtime_error("coefficient at (" + mu.to_string(',') + ") failed: " + outcome.error);
        }
        alpha.add_term(mu, *outcome.value);
    }
    auto orders = pdnf::reconstruct(alpha, level);
    return pdnf::NormalFormResult{level, std::move(alpha), {}, std::move(orders)};
}

int run_normalize(const std::string &input, std::optional<unsigned> level, std::optional<unsigned> order,
                  const std::string &output, unsigned threads, pdnf::EmitMode emit)
{
    if (level.has_value() == order.has_value()) {
        std::cerr << "normalize: exactly one of --level or --order is required\n";
        return exit_usage;
    }
    if (order && *order < 2) {
        std::cerr << "normalize: --order must be at least 2\n";
        return exit_usage;
    }
    if (level && *level < 1) {
        std::cerr << "normalize: --level must be at least 1\n";
        return exit_usage;
    }
    const auto spec = load(input);
    const unsigned m = level ? *level : *order - 1;
    const auto result = normalize_with_threads(spec, m, threads);
    const std::string report = pdnf::format_report(result, emit);
    if (output.empty()) {
        std::cout << report;
    } else {
        std::ofstream out(output);
        if (!out) {
            throw InputError("--output " + output + ": cannot open for writing");
        }
        out << report;
    }
    return 0;
}

int run_coeff(const std::string &input, const std::vector<std::string> &mus, unsigned threads)
{
    const auto spec = load(input);
    std::vector<pdnf::MultiIndex> targets;
    for (const auto &text : mus) {
        pdnf::MultiIndex mu;
        try {
            mu = pdnf::parse_multi_index(text, spec->parameter_count());
        } catch (const std::invalid_argument &e) {
            throw InputError("--mu \"" + text + "\": " + e.what());
        }
        if (mu.is_zero()) {
            throw InputError("--mu \"" + text + "\": target must be nonzero");
        }
        const auto weight = pdnf::resonance_weight(*spec, mu);
        if (!weight.is_zero()) {
            throw InputError("--mu \"" + text + "\": not resonant (weight " + weight.to_string() + ")");
        }
        targets.push_back(std::move(mu));
    }
    const auto outcomes = pdnf::normalize_targets(spec, targets, threads);
    for (const auto &mu : targets) {
        const auto &outcome = outcomes.at(mu);
        if (!outcome.value) {
            throw std::runtime_error("coefficient at (" + mu.to_string(',') + ") failed: " + outcome.error);
        }
        std::cout << pdnf::to_string(*outcome.value) << '\n';
    }
    return 0;
}

// A system whose parameters all carry the same phase degree has level s
// living entirely in one phase degree, so the level-graded and classical
// normal forms coincide term by term.
bool is_homogeneous(const pdnf::SystemSpec &spec)
{
    const auto &params = spec.parameters();
    return std::all_of(params.begin(), params.end(), [&](const pdnf::Parameter &p) {
        return pdnf::degree(p.exponent) == pdnf::degree(params.front().exponent);
    });
}

int run_verify(const std::string &input, unsigned level, std::uint64_t seed, unsigned trials)
{
    if (level < 1) {
        std::cerr << "verify: --level must be at least 1\n";
        return exit_usage;
    }
    const auto spec = load(input);
    const auto result = pdnf::normalize(spec, level);
    std::mt19937_64 rng(seed);
    bool ok = true;

    for (unsigned t = 0; t < trials; ++t) {
        const auto sigma = pdnf::random_assignment(*spec, rng);
        const auto report = pdnf::conjugacy_check(*spec, result, sigma, level);
        std::cout << "trial " << t + 1 << ": " << (report.passed ? "PASS " : "FAIL ") << report.describe() << '\n';
        ok = ok && report.passed;

        if (t == 0 && level + 1 >= 2) {
            const bool enforced = is_homogeneous(*spec);
            const unsigned degree = enforced ? level + 1 : std::min(level + 1, 5U);
            if (degree < 2) {
                continue;
            }
            const auto classical = pdnf::classical_normalize(pdnf::instantiate(*spec, sigma), degree);
            const auto evaluated = pdnf::evaluate(result.alpha, sigma);
            const auto diff = pdnf::first_difference(classical.normal_form, evaluated, degree);
            std::cout << "classical comparison through degree " << degree << ": "
                      << (diff ? "differs at " + diff->to_string() : std::string("agrees"))
                      << (enforced ? "" : " (informational)") << '\n';
            if (enforced && diff) {
                ok = false;
            }
        }
    }
    std::cout << (ok ? "verification passed" : "verification FAILED") << '\n';
    return ok ? 0 : exit_verify;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Parametric Poincare-Dulac normal forms"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::optional<unsigned> level;
    std::optional<unsigned> order;
    unsigned threads = 1;
    std::string emit = "both";
    std::vector<std::string> mus;
    std::uint64_t seed = 1;
    unsigned trials = 3;
    unsigned verify_level = 0;

    auto *normalize = app.add_subcommand("normalize", "Normalize a system up to a level or phase order");
    normalize->add_option("--input", input, "System file")->required();
    auto *level_opt = normalize->add_option("--level", level, "Target level (parameter degree)");
    auto *order_opt = normalize->add_option("--order", order, "Target phase order; runs level order-1");
    level_opt->excludes(order_opt);
    normalize->add_option("--output", output, "Write the report here instead of stdout");
    normalize->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    normalize->add_option("--emit", emit, "Report sections")->check(CLI::IsMember({"levels", "orders", "both"}));

    auto *coeff = app.add_subcommand("coeff", "Single normal-form coefficients by divisor locality");
    coeff->add_option("--input", input, "System file")->required();
    coeff->add_option("--mu", mus, "Resonant multi-index c1,...,cl (repeatable)")->required();
    coeff->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    auto *verify = app.add_subcommand("verify", "Check the normal form against the classical oracle");
    verify->add_option("--input", input, "System file")->required();
    verify->add_option("--level", verify_level, "Target level")->required();
    verify->add_option("--seed", seed, "Random seed for parameter values");
    verify->add_option("--trials", trials, "Number of random parameter assignments");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
        return exit_usage;
    }

    try {
        if (normalize->parsed()) {
            const auto mode = emit == "levels" ? pdnf::EmitMode::levels
                              : emit == "orders" ? pdnf::EmitMode::orders
                                                 : pdnf::EmitMode::both;
            return run_normalize(input, level, order, output, threads, mode);
        }
        if (coeff->parsed()) {
            return run_coeff(input, mus, threads);
        }
        return run_verify(input, verify_level, seed, trials);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
}
