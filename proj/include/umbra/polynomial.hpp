#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <umbra/rational.hpp>

namespace umbra
{

// Dense univariate polynomial in x over the rationals. Coefficient i is the
// coefficient of x^i; trailing zeros are never stored, so the zero
// polynomial has no coefficients and equality is structural.
class Polynomial
{
public:
    Polynomial() = default;
    // Constant polynomial.
    Polynomial(const Rational &c);
    template <std::integral I>
    Polynomial(I c) : Polynomial(Rational(c))
    {
    }
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial x();
    static Polynomial monomial(int degree, const Rational &c = Rational(1));

    // -1 for the zero polynomial.
    int degree() const noexcept
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    bool is_constant() const noexcept
    {
        return m_coeffs.size() <= 1;
    }

    // Coefficient of x^i, zero beyond the degree.
    Rational coeff(int i) const;
    std::span<const Rational> coefficients() const noexcept
    {
        return m_coeffs;
    }

    Rational operator()(const Rational &c) const;

    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Polynomial &o);
    Polynomial &operator*=(const Rational &c);
    Polynomial &operator/=(const Rational &c);

    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        return a -= b;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(Polynomial a, const Rational &c)
    {
        return a *= c;
    }
    friend Polynomial operator*(const Rational &c, Polynomial a)
    {
        return a *= c;
    }
    friend Polynomial operator/(Polynomial a, const Rational &c)
    {
        return a /= c;
    }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    // Ascending powers, e.g. "1/3 - 1x + 1x^2"; "0" for the zero polynomial.
    std::string str() const;
    std::string latex() const;

private:
    void normalize();

    std::vector<Rational> m_coeffs;
};

std::ostream &operator<<(std::ostream &os, const Polynomial &p);

Rational evaluate(const Polynomial &p, const Rational &c);
// p(x + c).
Polynomial shift(const Polynomial &p, const Rational &c);
// p(-x).
Polynomial reflect(const Polynomial &p);
Polynomial derivative(const Polynomial &p);
Polynomial nth_derivative(const Polynomial &p, int k);
// p / x; throws std::domain_error when p(0) != 0.
Polynomial divide_by_x(const Polynomial &p);

// x(x+1)...(x+n-1); 1 for n = 0.
Polynomial rising_factorial(int n);
// x(x-1)...(x-n+1); 1 for n = 0.
Polynomial falling_factorial(int n);

} // namespace umbra
