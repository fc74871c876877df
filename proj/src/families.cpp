#include <umbra/families.hpp>

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace umbra::families
{

namespace
{

void require_nonnegative(int n, const char *what)
{
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + " must be nonnegative, got " + std::to_string(n));
    }
}

void require_triangle_index(int n, int m)
{
    if (n < 0 || m < 0 || m > n) {
        throw std::invalid_argument("Stirling index out of range: (" + std::to_string(n) + ", " + std::to_string(m)
                                    + ")");
    }
}

std::vector<Polynomial> factorial_coefficients(const Series<Polynomial> &gf, int n_max)
{
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(gf.factorial_coefficient(n));
    }
    return out;
}

// Both Stirling triangles, grown on demand and shared read-only between
// callers. A rebuild replaces the whole table under the exclusive lock.
class StirlingTables
{
public:
    Rational first(int n, int m)
    {
        return lookup(n, m, true);
    }
    Rational second(int n, int m)
    {
        return lookup(n, m, false);
    }

private:
    Rational lookup(int n, int m, bool first_kind)
    {
        {
            std::shared_lock lock(m_mutex);
            if (n < m_size) {
                return first_kind ? m_s1[idx(n, m)] : m_s2[idx(n, m)];
            }
        }
        std::unique_lock lock(m_mutex);
        if (n >= m_size) {
            rebuild(std::max(n + 1, 2 * m_size));
        }
        return first_kind ? m_s1[idx(n, m)] : m_s2[idx(n, m)];
    }

    static std::size_t idx(int n, int m)
    {
        return static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2 + static_cast<std::size_t>(m);
    }

    void rebuild(int size)
    {
        const std::size_t cells = idx(size, 0);
        std::vector<Rational> s1(cells), s2(cells);

        // First kind: coefficients of the falling factorials.
        for (int n = 0; n < size; ++n) {
            const Polynomial ff = falling_factorial(n);
            for (int m = 0; m <= n; ++m) {
                s1[idx(n, m)] = ff.coeff(m);
            }
        }

        // Second kind: n!/m! [t^n] (e^t - 1)^m.
        const int order = size - 1;
        Series<Rational> expm1 = exp_t(order);
        expm1[0] = Rational(0);
        Series<Rational> power = Series<Rational>::one(order);
        for (int m = 0; m < size; ++m) {
            const Rational inv_mfact = Rational(1) / factorial(m);
            for (int n = m; n < size; ++n) {
                s2[idx(n, m)] = power[n] * factorial(n) * inv_mfact;
            }
            power = mul(power, expm1);
        }

        m_s1 = std::move(s1);
        m_s2 = std::move(s2);
        m_size = size;
    }

    std::shared_mutex m_mutex;
    int m_size = 0;
    std::vector<Rational> m_s1, m_s2;
};

StirlingTables &tables()
{
    static StirlingTables t;
    return t;
}

} // namespace

Series<Rational> lif(int k, int order)
{
    return Series<Rational>::from_function(order, [k](int n) { return Rational(1) / (factorial(n) * Rational(n + 1).pow(k)); });
}

Series<Rational> exp_t(int order)
{
    return Series<Rational>::from_function(order, [](int n) { return Rational(1) / factorial(n); });
}

Series<Rational> log1p(int order)
{
    return Series<Rational>::from_function(order, [](int n) {
        if (n == 0) {
            return Rational(0);
        }
        return Rational(n % 2 == 1 ? 1 : -1, n);
    });
}

Series<Rational> t_over_log1p(int order)
{
    return div(Series<Rational>::t(order + 1), log1p(order + 1));
}

Series<Rational> t_over_expm1(int order)
{
    Series<Rational> expm1 = exp_t(order + 1);
    expm1[0] = Rational(0);
    return div(Series<Rational>::t(order + 1), expm1);
}

Series<Polynomial> exp_xt(int order)
{
    return Series<Polynomial>::from_function(
        order, [](int n) { return Polynomial::monomial(n, Rational(1) / factorial(n)); });
}

Series<Polynomial> one_plus_t_pow_x(int order, int sign)
{
    const Polynomial scaled_x = Polynomial::monomial(1, Rational(sign));
    return exp_series(lift(log1p(order)) * scaled_x);
}

Rational stirling1(int n, int m)
{
    require_triangle_index(n, m);
    return tables().first(n, m);
}

Rational stirling2(int n, int m)
{
    require_triangle_index(n, m);
    return tables().second(n, m);
}

Rational cauchy_number(int n)
{
    return higher_cauchy(n, 1);
}

Rational higher_cauchy(int n, int r)
{
    require_nonnegative(n, "n");
    return int_pow(t_over_log1p(n), r).factorial_coefficient(n);
}

Polynomial poly_cauchy(int n, int k)
{
    return poly_cauchy_sequence(n, k).back();
}

std::vector<Polynomial> poly_cauchy_sequence(int n_max, int k)
{
    require_nonnegative(n_max, "n");
    const Series<Polynomial> gf = lift(compose(lif(k, n_max), log1p(n_max))) * one_plus_t_pow_x(n_max, -1);
    return factorial_coefficients(gf, n_max);
}

std::vector<Rational> poly_cauchy_numbers(int n_max, int k)
{
    require_nonnegative(n_max, "n");
    const auto gf = compose(lif(k, n_max), log1p(n_max));
    std::vector<Rational> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(gf.factorial_coefficient(n));
    }
    return out;
}

Polynomial mixed_A(int n, int r, int k)
{
    return mixed_A_sequence(n, r, k).back();
}

std::vector<Polynomial> mixed_A_sequence(int n_max, int r, int k)
{
    require_nonnegative(n_max, "n");
    const int order = n_max;
    const Series<Rational> cauchy_part = int_pow(t_over_log1p(order), r);
    const Series<Rational> poly_part = compose(lif(k, order), log1p(order));
    const Series<Polynomial> gf = lift(mul(cauchy_part, poly_part)) * one_plus_t_pow_x(order, -1);
    return factorial_coefficients(gf, n_max);
}

Polynomial bernoulli_poly(int n, int alpha)
{
    return bernoulli_sequence(n, alpha).back();
}

std::vector<Polynomial> bernoulli_sequence(int n_max, int alpha)
{
    require_nonnegative(n_max, "n");
    const Series<Polynomial> gf = lift(int_pow(t_over_expm1(n_max), alpha)) * exp_xt(n_max);
    return factorial_coefficients(gf, n_max);
}

Polynomial frobenius_euler(int n, int s, const Rational &lambda)
{
    return frobenius_euler_sequence(n, s, lambda).back();
}

std::vector<Polynomial> frobenius_euler_sequence(int n_max, int s, const Rational &lambda)
{
    require_nonnegative(n_max, "n");
    if (lambda == Rational(1)) {
        throw std::domain_error("Frobenius-Euler polynomials need lambda != 1");
    }
    // (e^t - lambda) / (1 - lambda) has constant term 1.
    Series<Rational> base = exp_t(n_max);
    base[0] = base[0] - lambda;
    base *= Rational(1) / (Rational(1) - lambda);
    const Series<Polynomial> gf = lift(int_pow(base, -s)) * exp_xt(n_max);
    return factorial_coefficients(gf, n_max);
}

Polynomial narumi(int n, int r)
{
    return narumi_sequence(n, r).back();
}

std::vector<Polynomial> narumi_sequence(int n_max, int r)
{
    require_nonnegative(n_max, "n");
    const Series<Polynomial> gf = lift(int_pow(t_over_log1p(n_max), -r)) * one_plus_t_pow_x(n_max, 1);
    return factorial_coefficients(gf, n_max);
}

Polynomial narumi_via_bernoulli(int n, int r)
{
    return shift(bernoulli_poly(n, n + r + 1), Rational(1));
}

Polynomial bernoulli2(int n)
{
    return bernoulli2_sequence(n).back();
}

std::vector<Polynomial> bernoulli2_sequence(int n_max)
{
    require_nonnegative(n_max, "n");
    const Series<Polynomial> gf = lift(t_over_log1p(n_max)) * one_plus_t_pow_x(n_max, 1);
    return factorial_coefficients(gf, n_max);
}

Rational stirling1_by_recurrence(int n, int m)
{
    require_triangle_index(n, m);
    // S1(i+1, j) = S1(i, j-1) - i S1(i, j).
    std::vector<Rational> row{Rational(1)};
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> next(row.size() + 1);
        for (std::size_t j = 0; j < next.size(); ++j) {
            if (j > 0) {
                next[j] += row[j - 1];
            }
            if (j < row.size()) {
                next[j] -= row[j] * Rational(i);
            }
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(m)];
}

Rational stirling2_by_recurrence(int n, int m)
{
    require_triangle_index(n, m);
    // S2(i+1, j) = j S2(i, j) + S2(i, j-1).
    std::vector<Rational> row{Rational(1)};
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> next(row.size() + 1);
        for (std::size_t j = 0; j < next.size(); ++j) {
            if (j > 0) {
                next[j] += row[j - 1];
            }
            if (j < row.size()) {
                next[j] += row[j] * Rational(static_cast<long>(j));
            }
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(m)];
}

Rational poly_cauchy_number_closed_form(int n, int k)
{
    require_nonnegative(n, "n");
    Rational sum;
    for (int m = 0; m <= n; ++m) {
        sum += stirling1_by_recurrence(n, m) / Rational(m + 1).pow(k);
    }
    return sum;
}

} // namespace umbra::families
