#include <umbra/errors.hpp>
#include <umbra/families.hpp>
#include <umbra/sheffer.hpp>

#include <stdexcept>
#include <string>

namespace umbra::umbral
{

namespace
{

void require_order(const ShefferPair &pair, int needed, const char *what)
{
    if (pair.order() < needed) {
        throw truncation_error(std::string(what) + ": pair truncated at order " + std::to_string(pair.order()), needed);
    }
}

} // namespace

ShefferPair::ShefferPair(Series<Rational> g, Series<Rational> f) : m_g(std::move(g)), m_f(std::move(f))
{
    m_g.check_same_order(m_f);
    if (!m_g.is_invertible()) {
        throw std::domain_error("Sheffer pair: g must be an invertible series");
    }
    if (!m_f.is_delta()) {
        throw std::domain_error("Sheffer pair: f must be a delta series");
    }
}

Series<Rational> exp_neg_minus_one(int order)
{
    auto s = Series<Rational>::from_function(order, [](int n) {
        return Rational(n % 2 == 0 ? 1 : -1) / factorial(n);
    });
    s[0] = Rational(0);
    return s;
}

Series<Rational> exp_minus_one(int order)
{
    auto s = families::exp_t(order);
    s[0] = Rational(0);
    return s;
}

ShefferPair ShefferPair::identity(int order)
{
    return {Series<Rational>::one(order), Series<Rational>::t(order)};
}

ShefferPair ShefferPair::associated(const Series<Rational> &f)
{
    return {Series<Rational>::one(f.order()), f};
}

ShefferPair ShefferPair::bernoulli(int alpha, int order)
{
    // (e^t - 1)/t through `order`.
    const auto quotient = div(exp_minus_one(order + 1), Series<Rational>::t(order + 1));
    return {int_pow(quotient, alpha), Series<Rational>::t(order)};
}

ShefferPair ShefferPair::frobenius_euler(int s, const Rational &lambda, int order)
{
    if (lambda == Rational(1)) {
        throw std::domain_error("Frobenius-Euler pair needs lambda != 1");
    }
    Series<Rational> base = families::exp_t(order);
    base[0] = base[0] - lambda;
    base *= Rational(1) / (Rational(1) - lambda);
    return {int_pow(base, s), Series<Rational>::t(order)};
}

ShefferPair ShefferPair::mixed(int r, int k, int order)
{
    // t e^t / (e^t - 1), cancelling the common t.
    const auto t_exp = mul(Series<Rational>::t(order + 1), families::exp_t(order + 1));
    const auto factor = div(t_exp, exp_minus_one(order + 1));
    const auto lif_neg = compose(families::lif(k, order), -Series<Rational>::t(order));
    const auto g = div(int_pow(factor, r), lif_neg);
    return {g, exp_neg_minus_one(order)};
}

Polynomial UmbralOperator::apply(const Polynomial &p) const
{
    if (p.degree() > m_series.order()) {
        throw truncation_error("operator series of order " + std::to_string(m_series.order())
                                   + " applied to a polynomial of degree " + std::to_string(p.degree()),
                               p.degree());
    }
    Polynomial out;
    Polynomial d = p;
    for (int k = 0; k <= p.degree(); ++k) {
        if (!m_series[k].is_zero()) {
            out += d * m_series[k];
        }
        d = derivative(d);
    }
    return out;
}

Rational functional(const Series<Rational> &f, const Polynomial &p)
{
    if (p.degree() > f.order()) {
        throw truncation_error("functional of order " + std::to_string(f.order()) + " on a polynomial of degree "
                                   + std::to_string(p.degree()),
                               p.degree());
    }
    Rational out;
    for (int n = 0; n <= p.degree(); ++n) {
        if (!p.coeff(n).is_zero()) {
            out += p.coeff(n) * f.factorial_coefficient(n);
        }
    }
    return out;
}

Polynomial apply(const Series<Rational> &s, const Polynomial &p)
{
    return UmbralOperator(s).apply(p);
}

std::vector<Polynomial> sheffer_sequence_by_gf(const ShefferPair &pair, int n_max)
{
    require_order(pair, n_max, "sheffer_by_gf");
    const auto fbar = comp_inverse(pair.f());
    const auto inv_g = reciprocal(compose(pair.g(), fbar));
    const auto exponential = exp_series(lift(fbar) * Polynomial::x());
    const auto gf = lift(inv_g) * exponential;
    std::vector<Polynomial> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(gf.factorial_coefficient(n));
    }
    return out;
}

Polynomial sheffer_by_gf(const ShefferPair &pair, int n)
{
    return sheffer_sequence_by_gf(pair, n).back();
}

Polynomial sheffer_by_conjugate(const ShefferPair &pair, int n)
{
    require_order(pair, n, "sheffer_by_conjugate");
    const auto fbar = comp_inverse(pair.f());
    Series<Rational> term = reciprocal(compose(pair.g(), fbar));
    const Polynomial xn = Polynomial::monomial(n);
    std::vector<Rational> coeffs;
    for (int j = 0; j <= n; ++j) {
        coeffs.push_back(functional(term, xn) / factorial(j));
        term = mul(term, fbar);
    }
    return Polynomial(std::move(coeffs));
}

Matrix connection_constants(const ShefferPair &src, const ShefferPair &dst, int n)
{
    require_order(src, n, "connection_constants");
    require_order(dst, n, "connection_constants");
    const int order = std::min(src.order(), dst.order());
    const auto fbar = comp_inverse(src.f().truncated(order));
    const auto ratio = div(compose(dst.g().truncated(order), fbar), compose(src.g().truncated(order), fbar));
    const auto l_of_fbar = compose(dst.f().truncated(order), fbar);

    Matrix c(static_cast<std::size_t>(n) + 1, std::vector<Rational>(static_cast<std::size_t>(n) + 1));
    Series<Rational> term = ratio;
    for (int m = 0; m <= n; ++m) {
        const Rational inv_mfact = Rational(1) / factorial(m);
        for (int i = m; i <= n; ++i) {
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] = term.factorial_coefficient(i) * inv_mfact;
        }
        term = mul(term, l_of_fbar);
    }
    return c;
}

Polynomial transfer(const Series<Rational> &f, const Series<Rational> &g, int n)
{
    if (!f.is_delta() || !g.is_delta()) {
        throw std::domain_error("transfer formula needs two delta series");
    }
    if (n == 0) {
        return Polynomial(1);
    }
    const Polynomial p_n = sheffer_by_gf(ShefferPair::associated(f), n);
    const Polynomial reduced = divide_by_x(p_n);
    // f/g is invertible of order N - 1 after the shared t cancels.
    const auto ratio_power = int_pow(div(f, g), n);
    return Polynomial::x() * apply(ratio_power, reduced);
}

Polynomial sheffer_next(const ShefferPair &pair, const Polynomial &s_n, int n)
{
    require_order(pair, n + 2, "sheffer_next");
    const auto g_prime = pair.g().derivative();
    const auto f_prime = pair.f().derivative();
    const int order = g_prime.order();
    const auto log_deriv = div(g_prime, pair.g().truncated(order));
    const auto inv_f_prime = reciprocal(f_prime);
    const Polynomial lowered = apply(inv_f_prime, s_n);
    return Polynomial::x() * lowered - apply(log_deriv, lowered);
}

Polynomial sheffer_derivative(const ShefferPair &pair, int n, std::span<const Polynomial> lower)
{
    require_order(pair, n, "sheffer_derivative");
    if (static_cast<int>(lower.size()) < n) {
        throw std::invalid_argument("sheffer_derivative needs S_0 .. S_{n-1}");
    }
    const auto fbar = comp_inverse(pair.f());
    Polynomial out;
    for (int l = 0; l < n; ++l) {
        const Rational c = binomial(n, l) * fbar.factorial_coefficient(n - l);
        if (!c.is_zero()) {
            out += lower[static_cast<std::size_t>(l)] * c;
        }
    }
    return out;
}

} // namespace umbra::umbral
