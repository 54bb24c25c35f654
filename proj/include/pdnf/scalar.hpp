#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pdnf
{

// Exact Gaussian rational re + im*i. Both parts are kept canonical by GMP
// (lowest terms, positive denominator), so equality is structural.
class Scalar
{
public:
    Scalar() = default;
    Scalar(std::int64_t value) : m_re(static_cast<long>(value)) {}
    Scalar(std::int64_t num, std::int64_t den);
    explicit Scalar(mpq_class re, mpq_class im = 0);

    // Accepts `p`, `p/q`, `p/q+r/si`, `p/q-r/si`, `r/si`, `i`, `-i`.
    static Scalar parse(std::string_view text);

    const mpq_class &real() const { return m_re; }
    const mpq_class &imag() const { return m_im; }

    bool is_zero() const { return sgn(m_re) == 0 && sgn(m_im) == 0; }
    bool is_real() const { return sgn(m_im) == 0; }
    bool is_one() const { return m_re == 1 && sgn(m_im) == 0; }

    Scalar conj() const { return Scalar(m_re, -m_im); }
    // |z|^2, always real.
    mpq_class norm() const { return m_re * m_re + m_im * m_im; }

    Scalar operator-() const { return Scalar(-m_re, -m_im); }
    Scalar &operator+=(const Scalar &other);
    Scalar &operator-=(const Scalar &other);
    Scalar &operator*=(const Scalar &other);
    Scalar &operator/=(const Scalar &other);

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

    friend bool operator==(const Scalar &a, const Scalar &b) { return a.m_re == b.m_re && a.m_im == b.m_im; }

    // `p/q` or `p/q+r/si`; integers are printed without the `/1`.
    std::string to_string() const;

private:
    mpq_class m_re{0};
    mpq_class m_im{0};
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

Scalar pow(const Scalar &base, unsigned exponent);

} // namespace pdnf
