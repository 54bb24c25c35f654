#include "pdnf/report.hpp"

#include <sstream>

namespace pdnf
{

std::string format_term(const SystemSpec &spec, const MultiIndex &mu, const CoeffVector &coeff)
{
    std::ostringstream out;
    out << "mu";
    for (auto c : mu.entries()) {
        out << ' ' << c;
    }
    out << " | L";
    for (auto m : exponent_map(spec, mu)) {
        out << ' ' << m;
    }
    out << " | coeff";
    for (const auto &s : coeff) {
        out << ' ' << s;
    }
    return out.str();
}

std::string format_levels(const GVF &alpha, unsigned level)
{
    std::ostringstream out;
    for (unsigned s = 1; s <= level; ++s) {
        out << "level " << s << '\n';
        const GVF slice = level_slice(alpha, s);
        for (const auto &[mu, theta] : slice.terms()) {
            out << format_term(alpha.spec(), mu, theta) << '\n';
        }
    }
    return out.str();
}

std::string format_orders(const std::map<unsigned, GVF> &orders, unsigned level)
{
    std::ostringstream out;
    for (unsigned k = 2; k <= level + 1; ++k) {
        out << "order " << k << '\n';
        const auto it = orders.find(k);
        if (it == orders.end()) {
            continue;
        }
        for (const auto &[mu, theta] : it->second.terms()) {
            out << format_term(it->second.spec(), mu, theta) << '\n';
        }
    }
    return out.str();
}

std::string format_report(const NormalFormResult &result, EmitMode mode)
{
    const SystemSpec &spec = result.alpha.spec();
    std::ostringstream out;
    out << "# n " << spec.dimension() << " l " << spec.parameter_count() << " level " << result.level << '\n';
    if (mode != EmitMode::orders) {
        out << "[levels]\n" << format_levels(result.alpha, result.level);
    }
    if (mode != EmitMode::levels) {
        out << "[orders]\n" << format_orders(result.orders, result.level);
    }
    return out.str();
}

} // namespace pdnf
