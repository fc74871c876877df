#pragma once

#include <vector>

#include <umbra/polynomial.hpp>
#include <umbra/rational.hpp>
#include <umbra/series.hpp>

// Number and polynomial families built from their generating functions.
// Every constructor derives the truncation order it needs from n; the
// closed forms at the bottom of this header exist only as cross-checks.
namespace umbra::families
{

// Building blocks, all exact through the given order.

// Lif_k(t) = sum t^n / (n! (n+1)^k); k may be any integer.
Series<Rational> lif(int k, int order);
Series<Rational> exp_t(int order);
// log(1 + t).
Series<Rational> log1p(int order);
// t / log(1 + t).
Series<Rational> t_over_log1p(int order);
// t / (e^t - 1).
Series<Rational> t_over_expm1(int order);
// e^{x t} over Q[x].
Series<Polynomial> exp_xt(int order);
// (1 + t)^{sign * x} over Q[x], i.e. exp(sign * x * log(1 + t)).
Series<Polynomial> one_plus_t_pow_x(int order, int sign);

// Signed Stirling numbers of the first kind, (x)_n = sum_m S1(n,m) x^m.
// Throws std::invalid_argument unless 0 <= m <= n.
Rational stirling1(int n, int m);
// Stirling numbers of the second kind from (e^t - 1)^m.
Rational stirling2(int n, int m);

// Cauchy numbers of the first kind, n! [t^n] t/log(1+t).
Rational cauchy_number(int n);
// n! [t^n] (t/log(1+t))^r, any integer r.
Rational higher_cauchy(int n, int r);

// C_n^{(k)}(x): n! [t^n] Lif_k(log(1+t)) (1+t)^{-x}.
Polynomial poly_cauchy(int n, int k);
std::vector<Polynomial> poly_cauchy_sequence(int n_max, int k);
// C_0^{(k)} .. C_{n_max}^{(k)} from Lif_k(log(1+t)) alone.
std::vector<Rational> poly_cauchy_numbers(int n_max, int k);

// A_n^{(r,k)}(x): n! [t^n] (t/log(1+t))^r Lif_k(log(1+t)) (1+t)^{-x}.
Polynomial mixed_A(int n, int r, int k);
// A_0 .. A_{n_max} from a single expansion.
std::vector<Polynomial> mixed_A_sequence(int n_max, int r, int k);

// B_n^{(alpha)}(x): (t/(e^t-1))^alpha e^{xt}.
Polynomial bernoulli_poly(int n, int alpha);
std::vector<Polynomial> bernoulli_sequence(int n_max, int alpha);

// H_n^{(s)}(x|lambda): ((1-lambda)/(e^t-lambda))^s e^{xt}, lambda != 1.
Polynomial frobenius_euler(int n, int s, const Rational &lambda);
std::vector<Polynomial> frobenius_euler_sequence(int n_max, int s, const Rational &lambda);

// N_n^{(r)}(x): (t/log(1+t))^{-r} (1+t)^x.
Polynomial narumi(int n, int r);
std::vector<Polynomial> narumi_sequence(int n_max, int r);
// B_n^{(n+r+1)}(x+1), which equals narumi(n, r).
Polynomial narumi_via_bernoulli(int n, int r);

// b_n(x): t/log(1+t) (1+t)^x.
Polynomial bernoulli2(int n);
std::vector<Polynomial> bernoulli2_sequence(int n_max);

// Cross-checks, independent of the generating-function path.
Rational stirling1_by_recurrence(int n, int m);
Rational stirling2_by_recurrence(int n, int m);
// C_n^{(k)} = sum_m S1(n,m) / (m+1)^k.
Rational poly_cauchy_number_closed_form(int n, int k);

} // namespace umbra::families
