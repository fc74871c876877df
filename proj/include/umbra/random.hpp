#pragma once

#include <random>
#include <vector>

#include <umbra/polynomial.hpp>
#include <umbra/rational.hpp>
#include <umbra/series.hpp>

// Seeded generators of small random values for property checks.
namespace umbra::random
{

using Engine = std::mt19937_64;

// num/den with |num| <= bound and 1 <= den <= bound.
inline Rational rational(Engine &rng, int bound = 9)
{
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return Rational(num(rng), den(rng));
}

inline Rational nonzero_rational(Engine &rng, int bound = 9)
{
    Rational q;
    while (q.is_zero()) {
        q = rational(rng, bound);
    }
    return q;
}

// Degree at most max_degree.
inline Polynomial polynomial(Engine &rng, int max_degree, int bound = 9)
{
    std::vector<Rational> c;
    for (int i = 0; i <= max_degree; ++i) {
        c.push_back(rational(rng, bound));
    }
    return Polynomial(std::move(c));
}

inline Series<Rational> series(Engine &rng, int order, int bound = 9)
{
    return Series<Rational>::from_function(order, [&](int) { return rational(rng, bound); });
}

// Nonzero constant term.
inline Series<Rational> invertible_series(Engine &rng, int order, int bound = 9)
{
    auto s = series(rng, order, bound);
    s[0] = nonzero_rational(rng, bound);
    return s;
}

// Zero constant term, nonzero linear term.
inline Series<Rational> delta_series(Engine &rng, int order, int bound = 9)
{
    auto s = series(rng, order, bound);
    s[0] = Rational(0);
    s[1] = nonzero_rational(rng, bound);
    return s;
}

} // namespace umbra::random
