#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <umbra/errors.hpp>
#include <umbra/polynomial.hpp>
#include <umbra/rational.hpp>

namespace umbra
{

// What a truncated power series needs from its coefficients: a commutative
// ring with rational scalars and a way to invert units.
template <typename R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static bool is_unit(const Rational &a)
    {
        return !a.is_zero();
    }
    static Rational inverse(const Rational &a)
    {
        return Rational(1) / a;
    }
};

template <>
struct ring_traits<Polynomial> {
    // Units of Q[x] are the nonzero constants.
    static bool is_unit(const Polynomial &a)
    {
        return a.degree() == 0;
    }
    static Polynomial inverse(const Polynomial &a)
    {
        if (!is_unit(a)) {
            throw std::domain_error("polynomial " + a.str() + " is not a unit");
        }
        return Polynomial(Rational(1) / a.coeff(0));
    }
};

template <typename R>
concept CoefficientRing = std::regular<R> && requires(R a, R b, Rational q) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a * q } -> std::convertible_to<R>;
    { a / q } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { ring_traits<R>::is_unit(a) } -> std::convertible_to<bool>;
    { ring_traits<R>::inverse(a) } -> std::convertible_to<R>;
    R(Rational(1));
};

// Truncated formal power series c_0 + c_1 t + ... + c_N t^N. The
// truncation order N is part of the value: N + 1 coefficients are always
// stored and every operation is exact through index N.
template <CoefficientRing R>
class Series
{
public:
    using coefficient_type = R;

    // Zero series of the given order.
    explicit Series(int order)
    {
        if (order < 0) {
            throw std::invalid_argument("negative truncation order");
        }
        m_coeffs.assign(static_cast<std::size_t>(order) + 1, R{});
    }

    // Order is coeffs.size() - 1.
    explicit Series(std::vector<R> coeffs) : m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.empty()) {
            throw std::invalid_argument("a series needs at least one coefficient");
        }
    }

    static Series constant(const R &c, int order)
    {
        Series s(order);
        s.m_coeffs[0] = c;
        return s;
    }
    static Series one(int order)
    {
        return constant(R(Rational(1)), order);
    }
    // c t^k, zero when k exceeds the order.
    static Series monomial(int k, const R &c, int order)
    {
        Series s(order);
        if (k <= order) {
            s.m_coeffs[static_cast<std::size_t>(k)] = c;
        }
        return s;
    }
    // The series t.
    static Series t(int order)
    {
        return monomial(1, R(Rational(1)), order);
    }
    static Series from_function(int order, const std::function<R(int)> &coeff)
    {
        Series s(order);
        for (int i = 0; i <= order; ++i) {
            s.m_coeffs[static_cast<std::size_t>(i)] = coeff(i);
        }
        return s;
    }

    int order() const noexcept
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }

    const R &operator[](int i) const
    {
        return m_coeffs.at(static_cast<std::size_t>(i));
    }
    R &operator[](int i)
    {
        return m_coeffs.at(static_cast<std::size_t>(i));
    }
    const std::vector<R> &coefficients() const noexcept
    {
        return m_coeffs;
    }

    // [t^n] f. Throws truncation_error beyond the order.
    R coefficient(int n) const
    {
        if (n < 0) {
            throw std::invalid_argument("negative coefficient index");
        }
        if (n > order()) {
            throw truncation_error("coefficient " + std::to_string(n) + " beyond truncation order "
                                       + std::to_string(order()),
                                   n);
        }
        return m_coeffs[static_cast<std::size_t>(n)];
    }
    // n! [t^n] f, i.e. <f(t) | x^n>.
    R factorial_coefficient(int n) const
    {
        return coefficient(n) * factorial(n);
    }

    // Index of the first nonzero coefficient; order() + 1 for the zero series.
    int valuation() const noexcept
    {
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            if (!m_coeffs[i].is_zero()) {
                return static_cast<int>(i);
            }
        }
        return order() + 1;
    }
    bool is_zero() const noexcept
    {
        return valuation() > order();
    }
    // A delta series needs at least a t coefficient to exist.
    bool is_delta() const
    {
        return order() >= 1 && valuation() == 1;
    }
    bool is_invertible() const
    {
        return ring_traits<R>::is_unit(m_coeffs[0]);
    }

    Series truncated(int new_order) const
    {
        if (new_order > order()) {
            throw truncation_error("cannot extend a series from order " + std::to_string(order()), new_order);
        }
        return Series(std::vector<R>(m_coeffs.begin(), m_coeffs.begin() + new_order + 1));
    }

    // d/dt; the result has order N - 1 (order 0 input gives the zero series).
    Series derivative() const
    {
        if (order() == 0) {
            return Series(0);
        }
        Series out(order() - 1);
        for (int i = 1; i <= order(); ++i) {
            out.m_coeffs[static_cast<std::size_t>(i - 1)] = m_coeffs[static_cast<std::size_t>(i)] * Rational(i);
        }
        return out;
    }

    // Antiderivative with zero constant term; the result has order N + 1.
    Series integral() const
    {
        Series out(order() + 1);
        for (int i = 0; i <= order(); ++i) {
            out.m_coeffs[static_cast<std::size_t>(i + 1)] = m_coeffs[static_cast<std::size_t>(i)] / Rational(i + 1);
        }
        return out;
    }

    // Apply fn to every coefficient, possibly changing the ring.
    template <typename Fn>
    auto map(Fn &&fn) const
    {
        using S = std::decay_t<decltype(fn(m_coeffs[0]))>;
        std::vector<S> out;
        out.reserve(m_coeffs.size());
        for (const auto &c : m_coeffs) {
            out.push_back(fn(c));
        }
        return Series<S>(std::move(out));
    }

    Series &operator+=(const Series &o)
    {
        check_same_order(o);
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            m_coeffs[i] = m_coeffs[i] + o.m_coeffs[i];
        }
        return *this;
    }
    Series &operator-=(const Series &o)
    {
        check_same_order(o);
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            m_coeffs[i] = m_coeffs[i] - o.m_coeffs[i];
        }
        return *this;
    }
    Series &operator*=(const R &c)
    {
        for (auto &v : m_coeffs) {
            v = v * c;
        }
        return *this;
    }
    Series &operator*=(const Rational &c) requires(!std::same_as<R, Rational>)
    {
        for (auto &v : m_coeffs) {
            v = v * c;
        }
        return *this;
    }

    friend Series operator+(Series a, const Series &b)
    {
        return a += b;
    }
    friend Series operator-(Series a, const Series &b)
    {
        return a -= b;
    }
    friend Series operator*(Series a, const R &c)
    {
        return a *= c;
    }
    friend Series operator*(const R &c, Series a)
    {
        return a *= c;
    }
    Series operator-() const
    {
        Series out = *this;
        for (auto &v : out.m_coeffs) {
            v = -v;
        }
        return out;
    }

    friend bool operator==(const Series &, const Series &) = default;

    void check_same_order(const Series &o) const
    {
        if (o.order() != order()) {
            throw std::invalid_argument("series order mismatch: " + std::to_string(order()) + " vs "
                                        + std::to_string(o.order()));
        }
    }

private:
    std::vector<R> m_coeffs;
};

// Cauchy product truncated at the common order.
template <CoefficientRing R>
Series<R> mul(const Series<R> &a, const Series<R> &b)
{
    a.check_same_order(b);
    const int n = a.order();
    Series<R> out(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            if (!b[j].is_zero()) {
                out[i + j] = out[i + j] + a[i] * b[j];
            }
        }
    }
    return out;
}

template <CoefficientRing R>
Series<R> operator*(const Series<R> &a, const Series<R> &b)
{
    return mul(a, b);
}

// a / b after cancelling the common factor t^v, v = valuation(b). The
// quotient is exact through order N - v.
template <CoefficientRing R>
Series<R> div(const Series<R> &a, const Series<R> &b)
{
    a.check_same_order(b);
    if (b.is_zero()) {
        throw division_by_zero("series division by zero");
    }
    const int v = b.valuation();
    if (a.valuation() < v) {
        throw std::domain_error("series division: ord(divisor) = " + std::to_string(v)
                                + " exceeds ord(dividend) = " + std::to_string(a.valuation()));
    }
    if (!ring_traits<R>::is_unit(b[v])) {
        throw std::domain_error("series division: leading coefficient of the divisor is not a unit");
    }
    const R lead_inv = ring_traits<R>::inverse(b[v]);
    const int n = a.order() - v;
    Series<R> q(n);
    for (int i = 0; i <= n; ++i) {
        R acc = a[i + v];
        for (int j = 1; j <= i; ++j) {
            if (!b[j + v].is_zero()) {
                acc = acc - b[j + v] * q[i - j];
            }
        }
        q[i] = acc * lead_inv;
    }
    return q;
}

template <CoefficientRing R>
Series<R> reciprocal(const Series<R> &a)
{
    if (!a.is_invertible()) {
        throw std::domain_error("reciprocal of a non-invertible series");
    }
    return div(Series<R>::one(a.order()), a);
}

// a^e for any integer e; negative e requires an invertible series.
template <CoefficientRing R>
Series<R> int_pow(const Series<R> &a, int e)
{
    if (e < 0) {
        if (!a.is_invertible()) {
            throw std::domain_error("negative power of a non-invertible series");
        }
        return int_pow(reciprocal(a), -e);
    }
    Series<R> result = Series<R>::one(a.order());
    Series<R> base = a;
    while (e > 0) {
        if (e & 1) {
            result = mul(result, base);
        }
        e >>= 1;
        if (e > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

// outer(inner(t)); inner must have zero constant term.
template <CoefficientRing R>
Series<R> compose(const Series<R> &outer, const Series<R> &inner)
{
    outer.check_same_order(inner);
    if (!inner[0].is_zero()) {
        throw std::domain_error("composition needs an inner series without constant term");
    }
    const int n = outer.order();
    Series<R> out(n);
    for (int i = n; i >= 0; --i) {
        out = mul(out, inner);
        out[0] = out[0] + outer[i];
    }
    return out;
}

// The compositional inverse g with f(g(t)) = t, by solving for one
// coefficient at a time: [t^n] f(g) = f_1 g_n + (terms in g_1..g_{n-1}).
template <CoefficientRing R>
Series<R> comp_inverse(const Series<R> &f)
{
    if (!f.is_delta()) {
        throw std::domain_error("compositional inverse needs a delta series (ord = 1)");
    }
    if (!ring_traits<R>::is_unit(f[1])) {
        throw std::domain_error("compositional inverse needs a unit linear coefficient");
    }
    const int n = f.order();
    const R inv = ring_traits<R>::inverse(f[1]);
    Series<R> g(n);
    if (n >= 1) {
        g[1] = inv;
    }
    for (int i = 2; i <= n; ++i) {
        const Series<R> partial = compose(f.truncated(i), g.truncated(i));
        g[i] = -(partial[i] * inv);
    }
    return g;
}

// log f for c_0 = 1, from (log f)' = f'/f:
// n L_n = n f_n - sum_{j=1}^{n-1} j L_j f_{n-j}.
template <CoefficientRing R>
Series<R> log_series(const Series<R> &f)
{
    if (f[0] != R(Rational(1))) {
        throw std::domain_error("log_series needs constant term 1");
    }
    const int n = f.order();
    Series<R> l(n);
    for (int i = 1; i <= n; ++i) {
        R acc = f[i] * Rational(i);
        for (int j = 1; j < i; ++j) {
            if (!l[j].is_zero() && !f[i - j].is_zero()) {
                acc = acc - l[j] * f[i - j] * Rational(j);
            }
        }
        l[i] = acc / Rational(i);
    }
    return l;
}

// exp f for c_0 = 0, from (exp f)' = f' exp f:
// n E_n = sum_{j=1}^{n} j f_j E_{n-j}.
template <CoefficientRing R>
Series<R> exp_series(const Series<R> &f)
{
    if (!f[0].is_zero()) {
        throw std::domain_error("exp_series needs zero constant term");
    }
    const int n = f.order();
    Series<R> e(n);
    e[0] = R(Rational(1));
    for (int i = 1; i <= n; ++i) {
        R acc{};
        for (int j = 1; j <= i; ++j) {
            if (!f[j].is_zero()) {
                acc = acc + f[j] * e[i - j] * Rational(j);
            }
        }
        e[i] = acc / Rational(i);
    }
    return e;
}

// Embed a rational series into Q[x]-coefficient series.
inline Series<Polynomial> lift(const Series<Rational> &s)
{
    return s.map([](const Rational &c) { return Polynomial(c); });
}

// Evaluate every coefficient at x = c.
inline Series<Rational> evaluate_at(const Series<Polynomial> &s, const Rational &c)
{
    return s.map([&](const Polynomial &p) { return p(c); });
}

} // namespace umbra
