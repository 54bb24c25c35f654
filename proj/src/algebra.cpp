#include "pdnf/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace pdnf
{

MultiIndex::MultiIndex(std::vector<std::uint32_t> entries)
    : m_entries(std::move(entries)), m_level(std::accumulate(m_entries.begin(), m_entries.end(), 0U))
{
}

MultiIndex MultiIndex::unit(std::size_t length, std::size_t q)
{
    std::vector<std::uint32_t> e(length, 0);
    e.at(q) = 1;
    return MultiIndex(std::move(e));
}

bool MultiIndex::divides(const MultiIndex &other) const
{
    if (size() != other.size()) {
        return false;
    }
    for (std::size_t j = 0; j < size(); ++j) {
        if (m_entries[j] > other.m_entries[j]) {
            return false;
        }
    }
    return true;
}

MultiIndex &MultiIndex::operator+=(const MultiIndex &other)
{
    if (size() != other.size()) {
        throw std::invalid_argument("multi-index length mismatch");
    }
    for (std::size_t j = 0; j < size(); ++j) {
        m_entries[j] += other.m_entries[j];
    }
    m_level += other.m_level;
    return *this;
}

std::string MultiIndex::to_string(char separator) const
{
    std::string out;
    for (std::size_t j = 0; j < size(); ++j) {
        if (j != 0) {
            out += separator;
        }
        out += std::to_string(m_entries[j]);
    }
    return out;
}

std::int64_t degree(const PhaseExponent &m)
{
    return std::accumulate(m.begin(), m.end(), std::int64_t{0});
}

bool is_zero(const CoeffVector &v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar &s) { return s.is_zero(); });
}

void axpy(CoeffVector &dst, const Scalar &factor, const CoeffVector &src)
{
    if (dst.size() != src.size()) {
        throw std::invalid_argument("coefficient vector length mismatch");
    }
    for (std::size_t i = 0; i < dst.size(); ++i) {
        if (!src[i].is_zero()) {
            dst[i] += factor * src[i];
        }
    }
}

std::string to_string(const CoeffVector &v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += v[i].to_string();
    }
    return out;
}

SpecError::SpecError(const std::string &what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), m_line(line)
{
}

namespace
{

bool is_identifier(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) != 0 || c == '_'; });
}

void validate_parameter(const Parameter &p, std::size_t n, int line)
{
    if (p.exponent.size() != n) {
        throw SpecError("parameter '" + p.name + "' has " + std::to_string(p.exponent.size())
                            + " exponents, expected " + std::to_string(n),
                        line);
    }
    if (p.equation >= n) {
        throw SpecError("parameter '" + p.name + "' refers to equation " + std::to_string(p.equation + 1)
                            + " of a " + std::to_string(n) + "-dimensional system",
                        line);
    }
    for (std::size_t j = 0; j < n; ++j) {
        const auto e = p.exponent[j];
        if (e < -1 || (e == -1 && j != p.equation)) {
            throw SpecError("parameter '" + p.name + "' has exponent " + std::to_string(e) + " at position "
                                + std::to_string(j + 1) + "; only position " + std::to_string(p.equation + 1)
                                + " may be -1 and no entry may be below -1",
                            line);
        }
    }
    if (degree(p.exponent) < 1) {
        throw SpecError("parameter '" + p.name + "' has exponent sum " + std::to_string(degree(p.exponent))
                            + "; it must be at least 1",
                        line);
    }
}

} // namespace

SystemSpec::SystemSpec(std::vector<Scalar> eigenvalues, std::vector<Parameter> parameters)
    : m_eigenvalues(std::move(eigenvalues)), m_parameters(std::move(parameters))
{
    if (m_eigenvalues.empty()) {
        throw SpecError("system dimension must be at least 1");
    }
    std::set<std::string_view> names;
    for (const auto &p : m_parameters) {
        if (!is_identifier(p.name)) {
            throw SpecError("invalid parameter name '" + p.name + "'");
        }
        if (!names.insert(p.name).second) {
            throw SpecError("duplicate parameter name '" + p.name + "'");
        }
        validate_parameter(p, dimension(), 0);
    }
}

std::size_t SystemSpec::index_of(std::string_view name) const
{
    const auto it = std::find_if(m_parameters.begin(), m_parameters.end(), [&](const Parameter &p) { return p.name == name; });
    return static_cast<std::size_t>(it - m_parameters.begin());
}

std::vector<PhaseExponent> SystemSpec::exponent_matrix() const
{
    std::vector<PhaseExponent> rows;
    rows.reserve(m_parameters.size());
    for (const auto &p : m_parameters) {
        rows.push_back(p.exponent);
    }
    return rows;
}

SystemSpec SystemSpec::without_parameter(std::size_t q) const
{
    auto params = m_parameters;
    params.erase(params.begin() + static_cast<std::ptrdiff_t>(q));
    return SystemSpec(m_eigenvalues, std::move(params));
}

namespace
{

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> words;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
        }
        if (pos > start) {
            words.push_back(line.substr(start, pos - start));
        }
    }
    return words;
}

std::int64_t parse_integer(std::string_view word, int line, std::string_view what)
{
    std::int64_t value = 0;
    const char *first = word.data();
    const char *last = word.data() + word.size();
    if (!word.empty() && word.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw SpecError("expected an integer " + std::string(what) + ", got '" + std::string(word) + "'", line);
    }
    return value;
}

} // namespace

SystemSpec parse_system(std::string_view text)
{
    std::optional<std::size_t> n;
    std::optional<std::vector<Scalar>> lambda;
    std::vector<Parameter> params;
    std::set<std::string, std::less<>> names;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto words = split_words(line);
        if (words.empty()) {
            continue;
        }
        const auto keyword = words[0];

        if (!n) {
            if (keyword != "n" || words.size() != 2) {
                throw SpecError("expected 'n <int>' as the first statement", line_no);
            }
            const auto value = parse_integer(words[1], line_no, "dimension");
            if (value < 1) {
                throw SpecError("dimension must be at least 1", line_no);
            }
            n = static_cast<std::size_t>(value);
            continue;
        }
        if (!lambda) {
            if (keyword != "lambda") {
                throw SpecError("expected 'lambda <scalar> ...' after the dimension", line_no);
            }
            if (words.size() != *n + 1) {
                throw SpecError("lambda needs " + std::to_string(*n) + " entries, got " + std::to_string(words.size() - 1),
                                line_no);
            }
            std::vector<Scalar> values;
            for (std::size_t k = 1; k < words.size(); ++k) {
                try {
                    values.push_back(Scalar::parse(words[k]));
                } catch (const std::invalid_argument &e) {
                    throw SpecError("eigenvalue " + std::to_string(k) + " is not an exact rational: " + e.what(), line_no);
                }
            }
            lambda = std::move(values);
            continue;
        }
        if (keyword != "param") {
            throw SpecError("unknown statement '" + std::string(keyword) + "'", line_no);
        }
        // param <name> eq <k> exp <i1> ... <in>
        if (words.size() != 5 + *n || words[2] != "eq" || words[4] != "exp") {
            throw SpecError("expected 'param <name> eq <k> exp' followed by " + std::to_string(*n) + " exponents", line_no);
        }
        Parameter p;
        p.name = std::string(words[1]);
        if (!is_identifier(p.name)) {
            throw SpecError("invalid parameter name '" + p.name + "'", line_no);
        }
        if (!names.insert(p.name).second) {
            throw SpecError("duplicate parameter name '" + p.name + "'", line_no);
        }
        const auto k = parse_integer(words[3], line_no, "equation index");
        if (k < 1 || static_cast<std::size_t>(k) > *n) {
            throw SpecError("equation index " + std::to_string(k) + " out of range 1.." + std::to_string(*n), line_no);
        }
        p.equation = static_cast<std::size_t>(k - 1);
        for (std::size_t j = 0; j < *n; ++j) {
            p.exponent.push_back(parse_integer(words[5 + j], line_no, "exponent"));
        }
        validate_parameter(p, *n, line_no);
        params.push_back(std::move(p));
    }

    if (!n) {
        throw SpecError("missing 'n <int>' statement");
    }
    if (!lambda) {
        throw SpecError("missing 'lambda' statement");
    }
    return SystemSpec(std::move(*lambda), std::move(params));
}

SystemSpec load_system(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw SpecError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_system(buffer.str());
}

std::string to_text(const SystemSpec &spec)
{
    std::ostringstream out;
    out << "n " << spec.dimension() << '\n' << "lambda";
    for (const auto &l : spec.eigenvalues()) {
        out << ' ' << l;
    }
    out << '\n';
    for (const auto &p : spec.parameters()) {
        out << "param " << p.name << " eq " << p.equation + 1 << " exp";
        for (auto e : p.exponent) {
            out << ' ' << e;
        }
        out << '\n';
    }
    return out.str();
}

PhaseExponent exponent_map(const SystemSpec &spec, const MultiIndex &mu)
{
    if (mu.size() != spec.parameter_count()) {
        throw std::invalid_argument("multi-index has length " + std::to_string(mu.size()) + ", system has "
                                    + std::to_string(spec.parameter_count()) + " parameters");
    }
    PhaseExponent m(spec.dimension(), 0);
    for (std::size_t q = 0; q < mu.size(); ++q) {
        if (mu[q] == 0) {
            continue;
        }
        const auto &row = spec.parameter(q).exponent;
        for (std::size_t j = 0; j < m.size(); ++j) {
            m[j] += static_cast<std::int64_t>(mu[q]) * row[j];
        }
    }
    return m;
}

Scalar resonance_weight(const SystemSpec &spec, const MultiIndex &mu)
{
    const auto m = exponent_map(spec, mu);
    Scalar w;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] != 0) {
            w += Scalar(m[j]) * spec.eigenvalues()[j];
        }
    }
    return w;
}

MultiIndex parse_multi_index(std::string_view text, std::size_t length)
{
    std::string normalized(text);
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    const auto words = split_words(normalized);
    if (words.size() != length) {
        throw std::invalid_argument("multi-index '" + std::string(text) + "' has " + std::to_string(words.size())
                                    + " entries, expected " + std::to_string(length));
    }
    std::vector<std::uint32_t> entries;
    for (auto w : words) {
        std::uint32_t v = 0;
        const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
        if (ec != std::errc() || ptr != w.data() + w.size()) {
            throw std::invalid_argument("multi-index entry '" + std::string(w) + "' is not a nonnegative integer");
        }
        entries.push_back(v);
    }
    return MultiIndex(std::move(entries));
}

} // namespace pdnf
