#include "pdnf/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace pdnf
{

namespace
{

bool is_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpq_class parse_rational(std::string_view text, std::string_view whole)
{
    auto fail = [&] { return std::invalid_argument("malformed scalar '" + std::string(whole) + "'"); };

    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) {
        throw fail();
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in scalar '" + std::string(whole) + "'");
    }
    mpq_class q(n, d);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

std::string rational_string(const mpq_class &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_str();
}

} // namespace

Scalar::Scalar(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    m_re = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    m_re.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : m_re(std::move(re)), m_im(std::move(im))
{
    m_re.canonicalize();
    m_im.canonicalize();
}

Scalar Scalar::parse(std::string_view text)
{
    if (text.empty()) {
        throw std::invalid_argument("empty scalar");
    }
    if (text.back() != 'i') {
        return Scalar(parse_rational(text, text));
    }

    const std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    const std::string_view re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);

    mpq_class im;
    if (im_part.empty() || im_part == "+") {
        im = 1;
    } else if (im_part == "-") {
        im = -1;
    } else {
        im = parse_rational(im_part, text);
    }
    mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part, text);
    return Scalar(std::move(re), std::move(im));
}

Scalar &Scalar::operator+=(const Scalar &other)
{
    m_re += other.m_re;
    m_im += other.m_im;
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &other)
{
    m_re -= other.m_re;
    m_im -= other.m_im;
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &other)
{
    if (other.is_real()) {
        m_re *= other.m_re;
        m_im *= other.m_re;
        return *this;
    }
    mpq_class re = m_re * other.m_re - m_im * other.m_im;
    mpq_class im = m_re * other.m_im + m_im * other.m_re;
    m_re = std::move(re);
    m_im = std::move(im);
    return *this;
}

Scalar &Scalar::operator/=(const Scalar &other)
{
    if (other.is_zero()) {
        throw std::domain_error("division by zero");
    }
    if (other.is_real()) {
        m_re /= other.m_re;
        m_im /= other.m_re;
        return *this;
    }
    const mpq_class d = other.norm();
    *this *= other.conj();
    m_re /= d;
    m_im /= d;
    return *this;
}

std::string Scalar::to_string() const
{
    if (is_real()) {
        return rational_string(m_re);
    }
    std::string out = rational_string(m_re);
    out += sgn(m_im) < 0 ? '-' : '+';
    out += rational_string(abs(m_im));
    out += 'i';
    return out;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s)
{
    return os << s.to_string();
}

Scalar pow(const Scalar &base, unsigned exponent)
{
    Scalar result(1);
    Scalar b = base;
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            b *= b;
        }
    }
    return result;
}

} // namespace pdnf
