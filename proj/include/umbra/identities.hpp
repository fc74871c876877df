#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <umbra/polynomial.hpp>
#include <umbra/rational.hpp>

namespace umbra::identities
{

enum class IdentityId {
    thm1,
    thm2,
    eq32,
    eq34,
    eq35,
    eq36,
    thm3,
    thm4,
    thm4_variant,
    thm5,
    thm5_variant,
    eq52,
    thm6,
    thm7,
    thm8,
    narumi_bernoulli,
    sheffer_pair_eq17,
    assoc_eq25,
};

inline constexpr std::array all_identities{
    IdentityId::thm1,  IdentityId::thm2,         IdentityId::eq32,  IdentityId::eq34,
    IdentityId::eq35,  IdentityId::eq36,         IdentityId::thm3,  IdentityId::thm4,
    IdentityId::thm4_variant, IdentityId::thm5,  IdentityId::thm5_variant, IdentityId::eq52,
    IdentityId::thm6,  IdentityId::thm7,         IdentityId::thm8,  IdentityId::narumi_bernoulli,
    IdentityId::sheffer_pair_eq17, IdentityId::assoc_eq25,
};

// "THM1", "EQ35", "THM4_VARIANT", ...
std::string_view name(IdentityId id);
// Case-insensitive inverse of name(); nullopt for unknown selectors.
std::optional<IdentityId> parse_identity(std::string_view text);

bool is_variant(IdentityId id);
// The base reading a variant belongs to (identity for non-variants).
IdentityId base_of(IdentityId id);
// Readings reported together by verify_variants: {base, variant} for
// THM4 and THM5, {id} otherwise.
std::vector<IdentityId> readings_of(IdentityId id);

// Which grid axes an identity ranges over.
struct Axes {
    bool r = false;
    bool k = false;
    bool s = false;
    bool lambda = false;
    bool m = false;
    bool y = false;
};
Axes axes_of(IdentityId id);

struct IntRange {
    int lo = 0;
    int hi = 0;

    friend bool operator==(const IntRange &, const IntRange &) = default;
};

struct GridSpec {
    IntRange n{0, 8};
    IntRange r{0, 3};
    IntRange k{-2, 3};
    IntRange s{0, 3};
    IntRange m{0, 8};
    std::vector<Rational> lambdas{Rational(2), Rational(-1), Rational(1, 2)};
    // Evaluation points for the second variable of two-variable identities.
    std::vector<Rational> ys{-2, -1, 0, 1, 2, 3, 4, 5, 6};
};

// The grid the acceptance criteria declare for an identity.
GridSpec default_grid(IdentityId id);

// Throws std::invalid_argument for empty ranges, empty lambda/y lists or
// negative n.
void validate(const GridSpec &grid);

// Unused axes are left at zero.
struct GridPoint {
    int n = 0;
    int r = 0;
    int k = 0;
    int s = 0;
    Rational lambda;
    int m = 0;
    Rational y;

    friend bool operator==(const GridPoint &, const GridPoint &) = default;
};

// Every point of the grid in lexicographic order (n, r, k, s, lambda, m).
std::vector<GridPoint> enumerate(IdentityId id, const GridSpec &grid);

// Reason the point lies outside the identity's domain, or nullopt.
std::optional<std::string> domain_violation(IdentityId id, const GridPoint &p);

enum class Verdict { pass, fail, skipped };

struct PointResult {
    GridPoint point;
    Verdict verdict = Verdict::pass;
    std::string reason;
    // Only populated for failures.
    Polynomial lhs, rhs, diff;
};

struct Totals {
    int pass = 0;
    int fail = 0;
    int skipped = 0;

    friend bool operator==(const Totals &, const Totals &) = default;
};

struct VerificationReport {
    IdentityId id = IdentityId::thm1;
    GridSpec grid;
    int truncation = 32;
    std::vector<PointResult> results;
    Totals totals;
    // Wall time; not part of the serialized document.
    double elapsed_ms = 0.0;

    bool passed() const
    {
        return totals.fail == 0 && totals.pass > 0;
    }
};

inline constexpr int default_truncation = 32;

// Evaluates both sides of every identity. The left-hand side always comes
// from the generating-function oracle (families::mixed_A and its shifts);
// the right-hand side is the combinatorial formula. Expansions are
// memoized and shared between worker threads.
class Engine
{
public:
    explicit Engine(int truncation = default_truncation);
    ~Engine();
    Engine(const Engine &) = delete;
    Engine &operator=(const Engine &) = delete;

    int truncation() const noexcept
    {
        return m_truncation;
    }

    // Truncation order needed to evaluate the identity at degree n.
    static int required_order(IdentityId id, int n);

    Polynomial lhs(IdentityId id, const GridPoint &p);
    // Throws std::domain_error for points outside the domain.
    Polynomial rhs(IdentityId id, const GridPoint &p);

    // Two-variable identities compare at every y in ys (at least n+1
    // distinct values are needed, otherwise the point is skipped).
    PointResult check(IdentityId id, const GridPoint &p, const std::vector<Rational> &ys);
    PointResult check(IdentityId id, const GridPoint &p);

    // Evaluates every grid point with `jobs` worker threads. Results are
    // in grid order whatever the thread count. Throws truncation_error
    // when the grid needs more than the engine's truncation order.
    VerificationReport verify(IdentityId id, const GridSpec &grid, int jobs = 1);
    // One report per reading of id (see readings_of).
    std::vector<VerificationReport> verify_variants(IdentityId id, const GridSpec &grid, int jobs = 1);

    // Memoized families, exposed for the right-hand sides and tests.
    Polynomial A(int n, int r, int k);
    Rational A_at(int n, int r, int k, const Rational &x);
    Polynomial bernoulli(int n, int alpha);
    Polynomial frobenius_euler(int n, int s, const Rational &lambda);
    Polynomial narumi(int n, int r);
    Rational poly_cauchy_number(int n, int k);
    Rational bernoulli2_number(int n);

private:
    struct Cache;

    void require(int order) const;

    int m_truncation;
    std::unique_ptr<Cache> m_cache;
};

} // namespace umbra::identities
