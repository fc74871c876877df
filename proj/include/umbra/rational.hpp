#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace umbra
{

// Exact arbitrary-precision fraction, always kept in canonical form
// (reduced, positive denominator, zero is 0/1), so equality is structural.
class Rational
{
public:
    Rational() = default;

    template <std::integral I>
    Rational(I v) : m_value(static_cast<long>(v))
    {
    }

    Rational(long num, long den);

    explicit Rational(mpq_class v);

    // Accepts "p", "p/q", with an optional leading sign.
    static Rational parse(std::string_view text);

    const mpq_class &raw() const noexcept
    {
        return m_value;
    }

    bool is_zero() const noexcept
    {
        return sgn(m_value) == 0;
    }
    bool is_integer() const;
    int sign() const noexcept
    {
        return sgn(m_value);
    }

    std::string numerator() const;
    std::string denominator() const;

    // "p" for integers, "p/q" otherwise.
    std::string str() const;
    // "\frac{p}{q}" form for LaTeX output.
    std::string latex() const;

    Rational pow(int e) const;
    Rational abs() const;

    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    Rational operator-() const;

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return cmp(a.m_value, b.m_value) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        return cmp(a.m_value, b.m_value) <=> 0;
    }

private:
    mpq_class m_value;
};

std::ostream &operator<<(std::ostream &os, const Rational &q);

Rational factorial(int n);
Rational binomial(int n, int k);

} // namespace umbra
