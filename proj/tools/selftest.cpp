#include "selftest.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <umbra/families.hpp>
#include <umbra/identities.hpp>
#include <umbra/random.hpp>
#include <umbra/report.hpp>
#include <umbra/sheffer.hpp>

namespace umbra::selftest
{

namespace
{

using Failure = std::optional<std::string>;

struct Check {
    const char *name;
    std::function<Failure()> run;
};

constexpr std::uint64_t seed = 20240917;
constexpr int trials = 40;

Failure rational_field()
{
    random::Engine rng(seed);
    for (int i = 0; i < trials; ++i) {
        const Rational a = random::rational(rng), b = random::rational(rng), c = random::nonzero_rational(rng);
        if ((a + b) * c != a * c + b * c || (a * b) * c != a * (b * c) || (a / c) * c != a) {
            return "field law fails at a=" + a.str() + " b=" + b.str() + " c=" + c.str();
        }
        if (Rational::parse(a.str()) != a) {
            return "parse(str) round trip fails for " + a.str();
        }
    }
    return std::nullopt;
}

Failure polynomial_ring()
{
    random::Engine rng(seed + 1);
    for (int i = 0; i < trials; ++i) {
        const Polynomial p = random::polynomial(rng, 5), q = random::polynomial(rng, 4);
        const Rational a = random::rational(rng), b = random::rational(rng);
        if ((p * q)(a) != p(a) * q(a) || (p + q)(a) != p(a) + q(a)) {
            return "evaluation is not a ring map for p=" + p.str();
        }
        if (shift(shift(p, a), b) != shift(p, a + b)) {
            return "shift does not compose for p=" + p.str();
        }
        if (derivative(p * q) != derivative(p) * q + p * derivative(q)) {
            return "Leibniz rule fails for p=" + p.str();
        }
    }
    for (int n = 0; n <= 12; ++n) {
        const Polynomial expected = Rational(n % 2 == 0 ? 1 : -1) * reflect(falling_factorial(n));
        if (rising_factorial(n) != expected) {
            return "rising factorial is not (-1)^n times reflected falling factorial at n=" + std::to_string(n);
        }
    }
    return std::nullopt;
}

Failure series_ring()
{
    random::Engine rng(seed + 2);
    const int order = 10;
    for (int i = 0; i < trials / 4; ++i) {
        const auto a = random::series(rng, order), b = random::series(rng, order);
        const auto u = random::invertible_series(rng, order);
        const auto d = random::delta_series(rng, order);
        if (mul(a, b) != mul(b, a) || mul(mul(a, b), u) != mul(a, mul(b, u))) {
            return std::string("multiplication is not commutative and associative");
        }
        if (div(mul(a, u), u) != a) {
            return std::string("(a u) / u != a");
        }
        for (int r = -3; r <= 3; ++r) {
            for (int s = -3; s <= 3; ++s) {
                if (mul(int_pow(u, r), int_pow(u, s)) != int_pow(u, r + s)) {
                    return "u^r u^s != u^(r+s) at r=" + std::to_string(r) + " s=" + std::to_string(s);
                }
            }
        }
        if (compose(d, comp_inverse(d)) != Series<Rational>::t(order)
            || compose(comp_inverse(d), d) != Series<Rational>::t(order)) {
            return std::string("compositional inverse fails");
        }
        if (log_series(exp_series(d)) != d) {
            return std::string("log(exp d) != d");
        }
        const Rational c = random::rational(rng);
        const auto p = lift(a) * Polynomial::x() + lift(b);
        if (evaluate_at(mul(p, lift(u)), c) != mul(evaluate_at(p, c), u)) {
            return std::string("evaluation does not commute with multiplication");
        }
    }
    return std::nullopt;
}

Failure stirling()
{
    for (int n = 0; n <= 20; ++n) {
        for (int m = 0; m <= n; ++m) {
            if (families::stirling1(n, m) != families::stirling1_by_recurrence(n, m)
                || families::stirling2(n, m) != families::stirling2_by_recurrence(n, m)) {
                return "generating function and recurrence disagree at (" + std::to_string(n) + ", "
                       + std::to_string(m) + ")";
            }
        }
    }
    for (int n = 0; n <= 12; ++n) {
        for (int m = 0; m <= n; ++m) {
            Rational sum;
            for (int l = m; l <= n; ++l) {
                sum += families::stirling1(n, l) * families::stirling2(l, m);
            }
            if (sum != Rational(n == m ? 1 : 0)) {
                return "S1 S2 is not the identity at (" + std::to_string(n) + ", " + std::to_string(m) + ")";
            }
        }
    }
    return std::nullopt;
}

Failure families_consistency()
{
    for (int k = -2; k <= 3; ++k) {
        const auto a = families::mixed_A_sequence(10, 0, k);
        const auto pc = families::poly_cauchy_sequence(10, k);
        for (int n = 0; n <= 10; ++n) {
            if (a[static_cast<std::size_t>(n)] != pc[static_cast<std::size_t>(n)]) {
                return "A_n^(0,k) != poly-Cauchy at n=" + std::to_string(n) + " k=" + std::to_string(k);
            }
            if (pc[static_cast<std::size_t>(n)](Rational(0)) != families::poly_cauchy_number_closed_form(n, k)) {
                return "poly-Cauchy number disagrees with its Stirling sum at n=" + std::to_string(n);
            }
        }
    }
    for (int r = 0; r <= 3; ++r) {
        const auto a = families::mixed_A_sequence(10, r, 1);
        for (int n = 0; n <= 10; ++n) {
            if (a[static_cast<std::size_t>(n)](Rational(0)) != families::higher_cauchy(n, r + 1)) {
                return "A_n^(r,1)(0) != C_n^(r+1) at n=" + std::to_string(n) + " r=" + std::to_string(r);
            }
        }
    }
    for (int n = 0; n <= 8; ++n) {
        const Polynomial a = families::mixed_A(n, 2, -1);
        if (a.degree() != n || a.coeff(n) != Rational(n % 2 == 0 ? 1 : -1)) {
            return "A_n has wrong degree or leading coefficient at n=" + std::to_string(n);
        }
        for (int r = -2; r <= 2; ++r) {
            if (families::narumi(n, r) != families::narumi_via_bernoulli(n, r)) {
                return "Narumi and shifted Bernoulli disagree at n=" + std::to_string(n);
            }
        }
        if (families::bernoulli2(n)(Rational(0)) != families::cauchy_number(n)) {
            return "b_n(0) != C_n at n=" + std::to_string(n);
        }
    }
    return std::nullopt;
}

Failure umbral_layer()
{
    random::Engine rng(seed + 3);
    const int order = 8;
    for (int i = 0; i < 6; ++i) {
        const umbral::ShefferPair pair(random::invertible_series(rng, order, 4), random::delta_series(rng, order, 4));
        for (int n = 0; n <= 6; ++n) {
            if (umbral::sheffer_by_gf(pair, n) != umbral::sheffer_by_conjugate(pair, n)) {
                return "generating-function and conjugate constructions disagree at n=" + std::to_string(n);
            }
        }
    }
    const auto t = Series<Rational>::t(order + 2);
    const auto f = umbral::exp_neg_minus_one(order + 2);
    for (int n = 0; n <= order; ++n) {
        const Polynomial expected = Rational(n % 2 == 0 ? 1 : -1) * rising_factorial(n);
        if (umbral::transfer(t, f, n) != expected) {
            return "transfer of x^n to e^{-t}-1 is not (-1)^n x^(n) at n=" + std::to_string(n);
        }
    }
    const auto src = umbral::ShefferPair::mixed(1, 2, order);
    const auto dst = umbral::ShefferPair::bernoulli(2, order);
    const auto c = umbral::connection_constants(src, dst, order);
    const auto d = umbral::connection_constants(dst, src, order);
    for (int i = 0; i <= order; ++i) {
        for (int j = 0; j <= order; ++j) {
            Rational sum;
            for (int l = 0; l <= order; ++l) {
                sum += c[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)]
                       * d[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
            }
            if (sum != Rational(i == j ? 1 : 0)) {
                return std::string("connection constants are not mutually inverse");
            }
        }
    }
    return std::nullopt;
}

Failure identity_harness()
{
    using identities::IdentityId;
    identities::Engine engine;
    for (IdentityId id : {IdentityId::thm1, IdentityId::eq36, IdentityId::thm8, IdentityId::eq52}) {
        auto grid = identities::default_grid(id);
        grid.n = {0, 5};
        const auto one = report::dump(report::encode(engine.verify(id, grid, 1)));
        const auto many = engine.verify(id, grid, 4);
        if (!many.passed()) {
            return std::string(identities::name(id)) + " fails on a small grid";
        }
        if (report::dump(report::encode(many)) != one) {
            return std::string(identities::name(id)) + " report depends on the worker count";
        }
    }
    return std::nullopt;
}

Failure report_roundtrip()
{
    random::Engine rng(seed + 4);
    for (int i = 0; i < trials; ++i) {
        const Polynomial p = random::polynomial(rng, 6, 1000);
        const auto text = report::dump(report::encode(p));
        if (report::decode_polynomial(report::json::parse(text)) != p) {
            return "JSON round trip changes " + p.str();
        }
    }
    return std::nullopt;
}

} // namespace

bool run(std::ostream &out)
{
    const std::vector<Check> checks{
        {"rational field laws", rational_field},
        {"polynomial ring and shifts", polynomial_ring},
        {"truncated series algebra", series_ring},
        {"Stirling triangles", stirling},
        {"family cross-checks", families_consistency},
        {"umbral layer", umbral_layer},
        {"identity harness", identity_harness},
        {"report round trip", report_roundtrip},
    };
    bool ok = true;
    for (const auto &check : checks) {
        Failure failure;
        try {
            failure = check.run();
        } catch (const std::exception &e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure) {
            ok = false;
            out << "FAIL " << check.name << ": " << *failure << "\n";
        } else {
            out << "ok   " << check.name << "\n";
        }
    }
    out << (ok ? "selftest passed\n" : "selftest FAILED\n");
    return ok;
}

} // namespace umbra::selftest
