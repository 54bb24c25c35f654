#pragma once

#include <string>

#include "pdnf/normalizer.hpp"

namespace pdnf
{

enum class EmitMode { levels, orders, both };

// `mu <c1> ... <cl> | L <m1> ... <mn> | coeff <s1> ... <sn>`
std::string format_term(const SystemSpec &spec, const MultiIndex &mu, const CoeffVector &coeff);

// Term lines for mu != 0 under `level <s>` headers, s = 1..level.
std::string format_levels(const GVF &alpha, unsigned level);

// Term lines under `order <k>` headers, k = 2..level+1.
std::string format_orders(const std::map<unsigned, GVF> &orders, unsigned level);

std::string format_report(const NormalFormResult &result, EmitMode mode);

} // namespace pdnf
