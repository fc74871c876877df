#include <doctest.h>

#include <umbra/errors.hpp>
#include <umbra/random.hpp>

#include "helpers.hpp"

using namespace umbra;

TEST_CASE("rationals are kept canonical")
{
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK((Rational(4, 2)).is_integer());
    CHECK(Q("-7/21") == Rational(-1, 3));
    CHECK(Q("+5").str() == "5");
    CHECK(Rational(-3, 4).latex() == "-\\frac{3}{4}");
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2, 3) < Rational(1, 5));
}

TEST_CASE("rational errors")
{
    CHECK_THROWS_AS(Rational(1, 0), division_by_zero);
    CHECK_THROWS_AS(Q("1/0"), division_by_zero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), division_by_zero);
    CHECK_THROWS_AS(Rational(0).pow(-1), division_by_zero);
    for (auto bad : {"", "1/", "/2", "x", "1/-2", "1.5", "--1"}) {
        CHECK_THROWS_AS(Q(bad), std::invalid_argument);
    }
}

TEST_CASE("big rationals stay exact")
{
    const Rational f = factorial(30);
    CHECK(f.str() == "265252859812191058636308480000000");
    CHECK(binomial(40, 20).str() == "137846528820");
    CHECK(binomial(5, 7) == Rational(0));
    CHECK((f / factorial(29)) == Rational(30));
}

TEST_CASE("rational field laws on random values")
{
    random::Engine rng(11);
    for (int i = 0; i < 200; ++i) {
        const Rational a = random::rational(rng), b = random::rational(rng), c = random::nonzero_rational(rng);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        CHECK((a / c) * c == a);
        CHECK(Q(a.str()) == a);
    }
}

TEST_CASE("polynomial formatting")
{
    CHECK(P({"1/3", "-1", "1"}).str() == "1/3 - 1x + 1x^2");
    CHECK(P({"-1", "1"}).str() == "-1 + 1x");
    CHECK(Polynomial().str() == "0");
    CHECK(P({"0", "0", "0"}).is_zero());
    CHECK(P({"0", "0", "0"}).degree() == -1);
    CHECK(P({"1/2", "0", "-3"}).degree() == 2);
    CHECK(P({"1/6", "-1", "1"}).latex() == "\\frac{1}{6} - x + x^{2}");
}

TEST_CASE("polynomial arithmetic and evaluation")
{
    const Polynomial p = P({"1", "2"});
    const Polynomial q = P({"-1", "0", "1/2"});
    CHECK(p * q == P({"-1", "-2", "1/2", "1"}));
    CHECK(p(Q("3/2")) == Rational(4));
    CHECK(evaluate(q, Rational(2)) == Rational(1));
    CHECK(p / Rational(2) == P({"1/2", "1"}));
    CHECK_THROWS_AS(p / Rational(0), division_by_zero);
    CHECK(p - p == Polynomial());
}

TEST_CASE("shift, reflect, derivatives")
{
    const Polynomial p = P({"1", "-1", "1"});
    CHECK(shift(p, Rational(1)) == P({"1", "1", "1"}));
    CHECK(reflect(p) == P({"1", "1", "1"}));
    CHECK(derivative(p) == P({"-1", "2"}));
    CHECK(nth_derivative(P({"0", "0", "0", "1"}), 2) == P({"0", "6"}));
    CHECK(nth_derivative(p, 5).is_zero());
    CHECK(divide_by_x(P({"0", "3", "1"})) == P({"3", "1"}));
    CHECK_THROWS_AS(divide_by_x(P({"1", "1"})), std::domain_error);
}

TEST_CASE("factorial polynomials")
{
    CHECK(rising_factorial(0) == Polynomial(1));
    CHECK(rising_factorial(3) == P({"0", "2", "3", "1"}));
    CHECK(falling_factorial(3) == P({"0", "2", "-3", "1"}));
    for (int n = 0; n <= 15; ++n) {
        const Rational sign = n % 2 == 0 ? 1 : -1;
        CHECK(rising_factorial(n) == sign * reflect(falling_factorial(n)));
    }
}

TEST_CASE("polynomial ring laws and shift composition on random values")
{
    random::Engine rng(12);
    for (int i = 0; i < 100; ++i) {
        const Polynomial p = random::polynomial(rng, 6), q = random::polynomial(rng, 4), s = random::polynomial(rng, 3);
        const Rational a = random::rational(rng), b = random::rational(rng);
        CHECK(p * q == q * p);
        CHECK((p * q) * s == p * (q * s));
        CHECK(p * (q + s) == p * q + p * s);
        CHECK((p * q)(a) == p(a) * q(a));
        CHECK(shift(shift(p, a), b) == shift(p, a + b));
        CHECK(shift(p, a)(b) == p(a + b));
        CHECK(reflect(reflect(p)) == p);
    }
}
