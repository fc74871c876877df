#pragma once

#include <span>
#include <vector>

#include <umbra/polynomial.hpp>
#include <umbra/rational.hpp>
#include <umbra/series.hpp>

// Umbral calculus on Q[x]: series in t act on polynomials as linear
// functionals (<t^k | x^n> = n! delta_{n,k}) and as operators
// (t^k p = p^{(k)}). Sheffer sequences are built from a pair (g, f) with
// g invertible and f a delta series.
namespace umbra::umbral
{

using Matrix = std::vector<std::vector<Rational>>;

class ShefferPair
{
public:
    // Throws std::domain_error unless g is invertible and f is a delta
    // series; g and f must share their order.
    ShefferPair(Series<Rational> g, Series<Rational> f);

    const Series<Rational> &g() const noexcept
    {
        return m_g;
    }
    const Series<Rational> &f() const noexcept
    {
        return m_f;
    }
    int order() const noexcept
    {
        return m_f.order();
    }

    // (1, t): the monomials x^n.
    static ShefferPair identity(int order);
    // (1, f): the associated sequence of f.
    static ShefferPair associated(const Series<Rational> &f);
    // (((e^t - 1)/t)^alpha, t): higher-order Bernoulli polynomials.
    static ShefferPair bernoulli(int alpha, int order);
    // (((e^t - lambda)/(1 - lambda))^s, t): Frobenius-Euler polynomials.
    static ShefferPair frobenius_euler(int s, const Rational &lambda, int order);
    // ((t e^t/(e^t - 1))^r / Lif_k(-t), e^{-t} - 1): the mixed-type A_n^{(r,k)}(x).
    static ShefferPair mixed(int r, int k, int order);

private:
    Series<Rational> m_g;
    Series<Rational> m_f;
};

// e^{-t} - 1.
Series<Rational> exp_neg_minus_one(int order);
// e^{t} - 1.
Series<Rational> exp_minus_one(int order);

// A series acting on polynomials through t^k -> d^k/dx^k.
class UmbralOperator
{
public:
    explicit UmbralOperator(Series<Rational> s) : m_series(std::move(s))
    {
    }

    const Series<Rational> &series() const noexcept
    {
        return m_series;
    }

    // Throws truncation_error when deg p exceeds the series order.
    Polynomial apply(const Polynomial &p) const;

private:
    Series<Rational> m_series;
};

// <f(t) | p(x)> = sum_n p_n n! [t^n] f.
Rational functional(const Series<Rational> &f, const Polynomial &p);
Polynomial apply(const Series<Rational> &s, const Polynomial &p);

// S_n(x) = n! [t^n] e^{x fbar(t)} / g(fbar(t)).
Polynomial sheffer_by_gf(const ShefferPair &pair, int n);
std::vector<Polynomial> sheffer_sequence_by_gf(const ShefferPair &pair, int n_max);

// S_n(x) = sum_j (1/j!) <g(fbar)^{-1} fbar^j | x^n> x^j.
Polynomial sheffer_by_conjugate(const ShefferPair &pair, int n);

// The (n+1)x(n+1) lower-triangular C with S_i = sum_m C[i][m] r_m for
// S ~ src and r ~ dst:
// C[i][m] = (1/m!) <h(fbar)/g(fbar) l(fbar)^m | x^i>, src = (g, f), dst = (h, l).
Matrix connection_constants(const ShefferPair &src, const ShefferPair &dst, int n);

// q_n = x (f/g)^n x^{-1} p_n for p_n ~ (1, f); returns q_n ~ (1, g).
Polynomial transfer(const Series<Rational> &f, const Series<Rational> &g, int n);

// S_{n+1} = (x - g'(t)/g(t)) (1/f'(t)) S_n. Needs pair.order() >= n + 2.
Polynomial sheffer_next(const ShefferPair &pair, const Polynomial &s_n, int n);

// d/dx S_n = sum_{l<n} binom(n,l) <fbar(t) | x^{n-l}> S_l(x), with
// lower = S_0 .. S_{n-1}.
Polynomial sheffer_derivative(const ShefferPair &pair, int n, std::span<const Polynomial> lower);

} // namespace umbra::umbral
