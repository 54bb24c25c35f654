#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "pdnf/oracle.hpp"
#include "pdnf/parallel.hpp"
#include "pdnf/report.hpp"

namespace py = pybind11;

namespace
{

using Index = std::vector<std::uint32_t>;
using Coefficients = std::vector<std::string>;
using Term = std::pair<Index, Coefficients>;

// Immutable handle on a parsed system.
struct System {
    pdnf::SpecPtr spec;
};

Coefficients strings(const pdnf::CoeffVector &v)
{
    Coefficients out;
    for (const auto &s : v) {
        out.push_back(s.to_string());
    }
    return out;
}

std::vector<Term> terms_of(const pdnf::GVF &f, bool skip_zero_index)
{
    std::vector<Term> out;
    for (const auto &[mu, theta] : f.terms()) {
        if (skip_zero_index && mu.is_zero()) {
            continue;
        }
        out.emplace_back(mu.entries(), strings(theta));
    }
    return out;
}

pdnf::MultiIndex index_for(const System &system, const Index &entries)
{
    if (entries.size() != system.spec->parameter_count()) {
        throw py::value_error("multi-index has " + std::to_string(entries.size()) + " entries, system has "
                              + std::to_string(system.spec->parameter_count()) + " parameters");
    }
    return pdnf::MultiIndex(entries);
}

unsigned level_argument(std::optional<unsigned> level, std::optional<unsigned> order)
{
    if (level.has_value() == order.has_value()) {
        throw py::value_error("pass exactly one of level or order");
    }
    if (order) {
        if (*order < 2) {
            throw py::value_error("order must be at least 2");
        }
        return *order - 1;
    }
    return *level;
}

pdnf::EmitMode emit_mode(const std::string &emit)
{
    if (emit == "levels") {
        return pdnf::EmitMode::levels;
    }
    if (emit == "orders") {
        return pdnf::EmitMode::orders;
    }
    if (emit == "both") {
        return pdnf::EmitMode::both;
    }
    throw py::value_error("emit must be 'levels', 'orders' or 'both'");
}

} // namespace

PYBIND11_MODULE(_pdnf, m)
{
    m.doc() = "Parametric Poincare-Dulac normal forms with exact rational arithmetic";

    py::register_exception<pdnf::SpecError>(m, "SpecError", PyExc_ValueError);

    py::class_<System>(m, "System")
        .def_static(
            "parse", [](const std::string &text) { return System{std::make_shared<const pdnf::SystemSpec>(pdnf::parse_system(text))}; },
            py::arg("text"))
        .def_static(
            "load", [](const std::string &path) { return System{std::make_shared<const pdnf::SystemSpec>(pdnf::load_system(path))}; },
            py::arg("path"))
        .def_property_readonly("dimension", [](const System &s) { return s.spec->dimension(); })
        .def_property_readonly("parameter_names",
                               [](const System &s) {
                                   std::vector<std::string> names;
                                   for (const auto &p : s.spec->parameters()) {
                                       names.push_back(p.name);
                                   }
                                   return names;
                               })
        .def_property_readonly("eigenvalues", [](const System &s) { return strings(s.spec->eigenvalues()); })
        .def("exponent", [](const System &s, const Index &mu) { return pdnf::exponent_map(*s.spec, index_for(s, mu)); },
             py::arg("mu"), "Phase exponent L(mu).")
        .def("is_resonant",
             [](const System &s, const Index &mu) { return pdnf::resonance_weight(*s.spec, index_for(s, mu)).is_zero(); },
             py::arg("mu"))
        .def(
            "resonant_multi_indices",
            [](const System &s, unsigned max_level) {
                std::vector<Index> out;
                for (const auto &mu : pdnf::resonant_multi_indices(*s.spec, max_level)) {
                    out.push_back(mu.entries());
                }
                return out;
            },
            py::arg("max_level"))
        .def("to_text", [](const System &s) { return pdnf::to_text(*s.spec); })
        .def("__repr__", [](const System &s) {
            return "<pdnf.System n=" + std::to_string(s.spec->dimension()) + " l="
                   + std::to_string(s.spec->parameter_count()) + ">";
        });

    py::class_<pdnf::NormalFormResult>(m, "NormalForm")
        .def_readonly("level", &pdnf::NormalFormResult::level)
        .def("terms", [](const pdnf::NormalFormResult &r) { return terms_of(r.alpha, true); },
             "Resonant terms (mu, coefficients) in degree-lexicographic order.")
        .def(
            "orders",
            [](const pdnf::NormalFormResult &r) {
                std::map<unsigned, std::vector<Term>> out;
                for (const auto &[k, g] : r.orders) {
                    out.emplace(k, terms_of(g, true));
                }
                return out;
            },
            "Phase degree -> resonant terms; empty degrees are omitted.")
        .def(
            "generator",
            [](const pdnf::NormalFormResult &r, unsigned s) {
                if (s < 1 || s > r.generators.size()) {
                    throw py::index_error("generator level out of range");
                }
                return terms_of(r.generators[s - 1], true);
            },
            py::arg("s"))
        .def(
            "coefficient",
            [](const pdnf::NormalFormResult &r, const Index &mu) {
                if (mu.size() != r.alpha.spec().parameter_count()) {
                    throw py::value_error("multi-index length does not match the system");
                }
                return strings(r.alpha.coefficient(pdnf::MultiIndex(mu)));
            },
            py::arg("mu"))
        .def(
            "report", [](const pdnf::NormalFormResult &r, const std::string &emit) { return pdnf::format_report(r, emit_mode(emit)); },
            py::arg("emit") = "both");

    m.def(
        "normalize",
        [](const System &s, std::optional<unsigned> level, std::optional<unsigned> order) {
            const unsigned m_level = level_argument(level, order);
            py::gil_scoped_release release;
            return pdnf::normalize(s.spec, m_level);
        },
        py::arg("system"), py::kw_only(), py::arg("level") = py::none(), py::arg("order") = py::none(),
        "Normal form through a parameter level, or through a phase order (level = order - 1).");

    m.def(
        "coefficient_at",
        [](const System &s, const Index &mu) {
            const auto target = index_for(s, mu);
            py::gil_scoped_release release;
            return strings(pdnf::coefficient_at(s.spec, target));
        },
        py::arg("system"), py::arg("mu"), "Single normal-form coefficient of a resonant multi-index.");

    m.def(
        "normalize_targets",
        [](const System &s, const std::vector<Index> &targets, unsigned workers) {
            std::vector<pdnf::MultiIndex> indices;
            for (const auto &t : targets) {
                indices.push_back(index_for(s, t));
            }
            pdnf::TargetResults results;
            {
                py::gil_scoped_release release;
                results = pdnf::normalize_targets(s.spec, indices, workers);
            }
            py::dict values;
            py::dict errors;
            for (const auto &[mu, outcome] : results) {
                const py::tuple key = py::cast(mu.entries());
                if (outcome.value) {
                    values[key] = strings(*outcome.value);
                } else {
                    errors[key] = outcome.error;
                }
            }
            return py::make_tuple(values, errors);
        },
        py::arg("system"), py::arg("targets"), py::arg("workers") = 1,
        "Coefficients for many targets in parallel; returns (values, errors) keyed by tuple(mu).");

    m.def(
        "verify",
        [](const System &s, const pdnf::NormalFormResult &result, std::uint64_t seed, unsigned trials) {
            std::vector<std::pair<bool, std::string>> out;
            std::mt19937_64 rng(seed);
            for (unsigned t = 0; t < trials; ++t) {
                const auto sigma = pdnf::random_assignment(*s.spec, rng);
                const auto report = pdnf::conjugacy_check(*s.spec, result, sigma, result.level);
                out.emplace_back(report.passed, report.describe());
            }
            return out;
        },
        py::arg("system"), py::arg("result"), py::arg("seed") = 1, py::arg("trials") = 3,
        "Conjugacy check at random rational parameter values; one (passed, message) per trial.");
}
