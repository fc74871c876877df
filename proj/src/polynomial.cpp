#include <umbra/errors.hpp>
#include <umbra/polynomial.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace umbra
{

Polynomial::Polynomial(const Rational &c)
{
    if (!c.is_zero()) {
        m_coeffs.push_back(c);
    }
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs))
{
    normalize();
}

Polynomial Polynomial::x()
{
    return monomial(1);
}

Polynomial Polynomial::monomial(int degree, const Rational &c)
{
    if (degree < 0) {
        throw std::invalid_argument("negative monomial degree");
    }
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize()
{
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
}

Rational Polynomial::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(m_coeffs.size())) {
        return Rational(0);
    }
    return m_coeffs[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational &c) const
{
    Rational acc;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc *= c;
        acc += *it;
    }
    return acc;
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] += o.m_coeffs[i];
    }
    normalize();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] -= o.m_coeffs[i];
    }
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.m_coeffs.size() + b.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
        if (a.m_coeffs[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
            out[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial &Polynomial::operator*=(const Polynomial &o)
{
    return *this = *this * o;
}

Polynomial &Polynomial::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        m_coeffs.clear();
        return *this;
    }
    for (auto &v : m_coeffs) {
        v *= c;
    }
    return *this;
}

Polynomial &Polynomial::operator/=(const Rational &c)
{
    if (c.is_zero()) {
        throw division_by_zero("polynomial division by a zero scalar");
    }
    for (auto &v : m_coeffs) {
        v /= c;
    }
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto &v : out.m_coeffs) {
        v = -v;
    }
    return out;
}

std::string Polynomial::str() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        const auto &c = m_coeffs[i];
        if (c.is_zero()) {
            continue;
        }
        if (first) {
            out += c.str();
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            out += c.abs().str();
        }
        if (i == 1) {
            out += "x";
        } else if (i > 1) {
            out += "x^" + std::to_string(i);
        }
        first = false;
    }
    return out;
}

std::string Polynomial::latex() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        const auto &c = m_coeffs[i];
        if (c.is_zero()) {
            continue;
        }
        if (!first) {
            out += c.sign() < 0 ? " - " : " + ";
        } else if (c.sign() < 0) {
            out += "-";
        }
        const auto mag = c.abs();
        if (i == 0 || mag != Rational(1)) {
            out += mag.latex();
        }
        if (i == 1) {
            out += "x";
        } else if (i > 1) {
            out += "x^{" + std::to_string(i) + "}";
        }
        first = false;
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const Polynomial &p)
{
    return os << p.str();
}

Rational evaluate(const Polynomial &p, const Rational &c)
{
    return p(c);
}

Polynomial shift(const Polynomial &p, const Rational &c)
{
    // Horner in the ring: ((a_d (x+c) + a_{d-1})(x+c) + ...).
    const Polynomial linear(std::vector<Rational>{c, Rational(1)});
    Polynomial out;
    const auto cs = p.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        out = out * linear + Polynomial(*it);
    }
    return out;
}

Polynomial reflect(const Polynomial &p)
{
    std::vector<Rational> v(p.coefficients().begin(), p.coefficients().end());
    for (std::size_t i = 1; i < v.size(); i += 2) {
        v[i] = -v[i];
    }
    return Polynomial(std::move(v));
}

Polynomial derivative(const Polynomial &p)
{
    if (p.degree() < 1) {
        return {};
    }
    const auto cs = p.coefficients();
    std::vector<Rational> v(cs.size() - 1);
    for (std::size_t i = 1; i < cs.size(); ++i) {
        v[i - 1] = cs[i] * Rational(static_cast<long>(i));
    }
    return Polynomial(std::move(v));
}

Polynomial nth_derivative(const Polynomial &p, int k)
{
    Polynomial out = p;
    for (int i = 0; i < k && !out.is_zero(); ++i) {
        out = derivative(out);
    }
    return out;
}

Polynomial divide_by_x(const Polynomial &p)
{
    if (p.is_zero()) {
        return {};
    }
    if (!p.coeff(0).is_zero()) {
        throw std::domain_error("polynomial is not divisible by x: " + p.str());
    }
    const auto cs = p.coefficients();
    return Polynomial(std::vector<Rational>(cs.begin() + 1, cs.end()));
}

Polynomial rising_factorial(int n)
{
    if (n < 0) {
        throw std::invalid_argument("rising factorial of negative length");
    }
    Polynomial out(1);
    for (int i = 0; i < n; ++i) {
        out *= Polynomial(std::vector<Rational>{Rational(i), Rational(1)});
    }
    return out;
}

Polynomial falling_factorial(int n)
{
    if (n < 0) {
        throw std::invalid_argument("falling factorial of negative length");
    }
    Polynomial out(1);
    for (int i = 0; i < n; ++i) {
        out *= Polynomial(std::vector<Rational>{Rational(-i), Rational(1)});
    }
    return out;
}

} // namespace umbra
