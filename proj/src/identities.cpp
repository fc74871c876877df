#include <umbra/errors.hpp>
#include <umbra/families.hpp>
#include <umbra/identities.hpp>
#include <umbra/sheffer.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

namespace umbra::identities
{

namespace
{

using families::stirling1;
using families::stirling2;

Rational sign_of(int e)
{
    return Rational(e % 2 == 0 ? 1 : -1);
}

Polynomial xpow(int j)
{
    return Polynomial::monomial(j);
}

std::string upper(std::string_view s)
{
    std::string out(s);
    for (auto &c : out) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return out;
}

// Memo of sequences f(0..order) keyed by K; a request beyond the cached
// length rebuilds the entry at a larger order. Entries are immutable once
// published.
template <typename K, typename T>
class SequenceMemo
{
public:
    using Builder = std::function<std::vector<T>(int order)>;

    T get(const K &key, int index, int min_order, const Builder &build)
    {
        {
            std::lock_guard lock(m_mutex);
            auto it = m_entries.find(key);
            if (it != m_entries.end() && static_cast<int>(it->second->size()) > index) {
                return (*it->second)[static_cast<std::size_t>(index)];
            }
        }
        auto fresh = std::make_shared<const std::vector<T>>(build(std::max(index, min_order)));
        std::lock_guard lock(m_mutex);
        auto &slot = m_entries[key];
        if (!slot || slot->size() < fresh->size()) {
            slot = fresh;
        }
        return (*slot)[static_cast<std::size_t>(index)];
    }

private:
    std::mutex m_mutex;
    std::map<K, std::shared_ptr<const std::vector<T>>> m_entries;
};

// All compositions a_1 + ... + a_parts = total with a_i >= 0.
void for_each_composition(int total, int parts, std::vector<int> &prefix,
                          const std::function<void(const std::vector<int> &)> &fn)
{
    if (parts == 0) {
        if (total == 0) {
            fn(prefix);
        }
        return;
    }
    for (int first = 0; first <= total; ++first) {
        prefix.push_back(first);
        for_each_composition(total - first, parts - 1, prefix, fn);
        prefix.pop_back();
    }
}

Rational multinomial(int total, const std::vector<int> &parts)
{
    Rational out = factorial(total);
    for (int p : parts) {
        out /= factorial(p);
    }
    return out;
}

} // namespace

std::string_view name(IdentityId id)
{
    switch (id) {
    case IdentityId::thm1: return "THM1";
    case IdentityId::thm2: return "THM2";
    case IdentityId::eq32: return "EQ32";
    case IdentityId::eq34: return "EQ34";
    case IdentityId::eq35: return "EQ35";
    case IdentityId::eq36: return "EQ36";
    case IdentityId::thm3: return "THM3";
    case IdentityId::thm4: return "THM4";
    case IdentityId::thm4_variant: return "THM4_VARIANT";
    case IdentityId::thm5: return "THM5";
    case IdentityId::thm5_variant: return "THM5_VARIANT";
    case IdentityId::eq52: return "EQ52";
    case IdentityId::thm6: return "THM6";
    case IdentityId::thm7: return "THM7";
    case IdentityId::thm8: return "THM8";
    case IdentityId::narumi_bernoulli: return "NARUMI_BERNOULLI";
    case IdentityId::sheffer_pair_eq17: return "SHEFFER_PAIR_EQ17";
    case IdentityId::assoc_eq25: return "ASSOC_EQ25";
    }
    return "?";
}

std::optional<IdentityId> parse_identity(std::string_view text)
{
    const auto wanted = upper(text);
    for (auto id : all_identities) {
        if (name(id) == wanted) {
            return id;
        }
    }
    return std::nullopt;
}

bool is_variant(IdentityId id)
{
    return id == IdentityId::thm4_variant || id == IdentityId::thm5_variant;
}

IdentityId base_of(IdentityId id)
{
    switch (id) {
    case IdentityId::thm4_variant: return IdentityId::thm4;
    case IdentityId::thm5_variant: return IdentityId::thm5;
    default: return id;
    }
}

std::vector<IdentityId> readings_of(IdentityId id)
{
    switch (base_of(id)) {
    case IdentityId::thm4: return {IdentityId::thm4, IdentityId::thm4_variant};
    case IdentityId::thm5: return {IdentityId::thm5, IdentityId::thm5_variant};
    default: return {id};
    }
}

Axes axes_of(IdentityId id)
{
    Axes a;
    a.r = true;
    a.k = id != IdentityId::narumi_bernoulli;
    a.s = id == IdentityId::thm6 || id == IdentityId::thm7;
    a.lambda = id == IdentityId::thm7;
    a.m = base_of(id) == IdentityId::thm5;
    a.y = id == IdentityId::eq35;
    return a;
}

GridSpec default_grid(IdentityId id)
{
    GridSpec g;
    switch (id) {
    case IdentityId::thm1:
    case IdentityId::eq34:
        g.r = {0, 3};
        break;
    case IdentityId::thm3:
    case IdentityId::thm4:
    case IdentityId::thm4_variant:
        g.n = {0, 6};
        g.r = {-2, 3};
        break;
    case IdentityId::thm5:
    case IdentityId::thm5_variant:
        g.n = {0, 6};
        g.m = {0, 6};
        g.r = {-2, 3};
        break;
    case IdentityId::narumi_bernoulli:
        g.n = {0, 10};
        g.r = {-3, 3};
        break;
    case IdentityId::sheffer_pair_eq17:
        g.r = {0, 3};
        g.k = {-1, 2};
        break;
    default:
        g.r = {-2, 3};
        break;
    }
    return g;
}

void validate(const GridSpec &grid)
{
    auto check = [](const IntRange &r, const char *axis) {
        if (r.lo > r.hi) {
            throw std::invalid_argument(std::string("empty range for ") + axis);
        }
    };
    check(grid.n, "n");
    check(grid.r, "r");
    check(grid.k, "k");
    check(grid.s, "s");
    check(grid.m, "m");
    if (grid.n.lo < 0) {
        throw std::invalid_argument("n must be nonnegative");
    }
    if (grid.lambdas.empty()) {
        throw std::invalid_argument("empty lambda list");
    }
    if (grid.ys.empty()) {
        throw std::invalid_argument("empty y list");
    }
}

std::vector<GridPoint> enumerate(IdentityId id, const GridSpec &grid)
{
    validate(grid);
    const Axes ax = axes_of(id);
    auto values = [](bool used, const IntRange &r) {
        std::vector<int> v;
        if (!used) {
            v.push_back(0);
            return v;
        }
        for (int i = r.lo; i <= r.hi; ++i) {
            v.push_back(i);
        }
        return v;
    };
    const std::vector<Rational> lambdas = ax.lambda ? grid.lambdas : std::vector<Rational>{Rational(0)};

    std::vector<GridPoint> out;
    for (int n = grid.n.lo; n <= grid.n.hi; ++n) {
        for (int r : values(ax.r, grid.r)) {
            for (int k : values(ax.k, grid.k)) {
                for (int s : values(ax.s, grid.s)) {
                    for (const auto &lambda : lambdas) {
                        for (int m : values(ax.m, grid.m)) {
                            out.push_back(GridPoint{n, r, k, s, lambda, m, Rational(0)});
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::optional<std::string> domain_violation(IdentityId id, const GridPoint &p)
{
    if (p.n < 0) {
        return "out-of-domain: n < 0";
    }
    switch (base_of(id)) {
    case IdentityId::thm1:
        if (p.r < 0) {
            return "r<0 for S2-based formula";
        }
        break;
    case IdentityId::eq34:
        if (p.r < 0) {
            return "out-of-domain: r<0 has no compositions";
        }
        break;
    case IdentityId::thm4:
        if (p.n < 1) {
            return "out-of-domain: requires n >= 1";
        }
        break;
    case IdentityId::thm5:
        if (p.m < 1 || p.m > p.n - 1) {
            return "out-of-domain: requires n-1 >= m >= 1";
        }
        break;
    case IdentityId::thm6:
        if (p.s < 0) {
            return "out-of-domain: requires s >= 0";
        }
        break;
    case IdentityId::thm7:
        if (p.lambda == Rational(1)) {
            return "lambda=1";
        }
        if (p.s < 0) {
            return "out-of-domain: requires s >= 0";
        }
        break;
    default:
        break;
    }
    return std::nullopt;
}

struct Engine::Cache {
    std::atomic<int> working_order{0};
    SequenceMemo<std::pair<int, int>, Polynomial> mixed;
    SequenceMemo<std::tuple<int, int, Rational>, Rational> mixed_values;
    SequenceMemo<int, Polynomial> bernoulli;
    SequenceMemo<std::pair<int, Rational>, Polynomial> frobenius;
    SequenceMemo<int, Polynomial> narumi;
    SequenceMemo<int, Rational> poly_cauchy;
    SequenceMemo<int, Rational> bernoulli2;
};

Engine::Engine(int truncation) : m_truncation(truncation), m_cache(std::make_unique<Cache>())
{
    if (truncation < 0) {
        throw std::invalid_argument("negative truncation order");
    }
}

Engine::~Engine() = default;

void Engine::require(int order) const
{
    if (order > m_truncation) {
        throw truncation_error("engine truncation order " + std::to_string(m_truncation) + " is too small", order);
    }
}

int Engine::required_order(IdentityId id, int n)
{
    return id == IdentityId::thm3 ? n + 1 : n;
}

Polynomial Engine::A(int n, int r, int k)
{
    require(n);
    return m_cache->mixed.get({r, k}, n, m_cache->working_order.load(),
                              [r, k](int order) { return families::mixed_A_sequence(order, r, k); });
}

Rational Engine::A_at(int n, int r, int k, const Rational &x)
{
    require(n);
    return m_cache->mixed_values.get({r, k, x}, n, m_cache->working_order.load(), [this, r, k, x](int order) {
        std::vector<Rational> v;
        for (int i = 0; i <= order; ++i) {
            v.push_back(A(i, r, k)(x));
        }
        return v;
    });
}

Polynomial Engine::bernoulli(int n, int alpha)
{
    require(n);
    return m_cache->bernoulli.get(alpha, n, m_cache->working_order.load(),
                                  [alpha](int order) { return families::bernoulli_sequence(order, alpha); });
}

Polynomial Engine::frobenius_euler(int n, int s, const Rational &lambda)
{
    require(n);
    return m_cache->frobenius.get({s, lambda}, n, m_cache->working_order.load(), [s, lambda](int order) {
        return families::frobenius_euler_sequence(order, s, lambda);
    });
}

Polynomial Engine::narumi(int n, int r)
{
    require(n);
    return m_cache->narumi.get(r, n, m_cache->working_order.load(),
                               [r](int order) { return families::narumi_sequence(order, r); });
}

Rational Engine::poly_cauchy_number(int n, int k)
{
    require(n);
    return m_cache->poly_cauchy.get(k, n, m_cache->working_order.load(),
                                    [k](int order) { return families::poly_cauchy_numbers(order, k); });
}

Rational Engine::bernoulli2_number(int n)
{
    require(n);
    return m_cache->bernoulli2.get(0, n, m_cache->working_order.load(), [](int order) {
        std::vector<Rational> v;
        for (const auto &p : families::bernoulli2_sequence(order)) {
            v.push_back(p(Rational(0)));
        }
        return v;
    });
}

Polynomial Engine::lhs(IdentityId id, const GridPoint &p)
{
    const int n = p.n, r = p.r, k = p.k;
    switch (base_of(id)) {
    case IdentityId::eq35:
        return shift(A(n, r, k), p.y);
    case IdentityId::eq36:
        return n == 0 ? Polynomial() : A(n - 1, r, k) * Rational(n);
    case IdentityId::thm3:
        return A(n + 1, r, k);
    case IdentityId::thm5: {
        Rational sum;
        for (int l = 0; l <= n - p.m; ++l) {
            sum += binomial(n, l) * stirling1(n - l, p.m) * A_at(l, r, k, Rational(0));
        }
        return Polynomial(sum);
    }
    case IdentityId::eq52:
        return derivative(A(n, r, k));
    case IdentityId::narumi_bernoulli:
        return narumi(n, r);
    case IdentityId::assoc_eq25: {
        require(n);
        const auto pair = umbral::ShefferPair::mixed(r, k, std::max(n, 1));
        return umbral::apply(pair.g(), A(n, r, k));
    }
    default:
        return A(n, r, k);
    }
}

Polynomial Engine::rhs(IdentityId id, const GridPoint &p)
{
    if (auto why = domain_violation(id, p)) {
        throw std::domain_error(std::string(name(id)) + ": " + *why);
    }
    const int n = p.n, r = p.r, k = p.k;
    Polynomial out;

    switch (id) {
    case IdentityId::thm1: {
        for (int j = 0; j <= n; ++j) {
            Rational c;
            for (int m = j; m <= n; ++m) {
                const Rational s1 = stirling1(n, m);
                if (s1.is_zero()) {
                    continue;
                }
                for (int l = 0; l <= m - j; ++l) {
                    const int top = m - l - j + r;
                    c += binomial(m, l) * binomial(m - l, j) / binomial(top, r) / Rational(l + 1).pow(k) * s1
                         * stirling2(top, r);
                }
            }
            out += xpow(j) * (c * sign_of(j));
        }
        return out;
    }

    case IdentityId::thm2:
    case IdentityId::eq32: {
        for (int j = 0; j <= n; ++j) {
            Rational c;
            for (int l = 0; l <= n - j; ++l) {
                const Rational outer = sign_of(j) * binomial(n, l + j) * stirling1(l + j, j);
                if (outer.is_zero()) {
                    continue;
                }
                for (int a = 0; a <= n - l - j; ++a) {
                    const Rational cauchy_part = id == IdentityId::thm2
                                                     ? bernoulli(a, a - r + 1)(Rational(1))
                                                     : narumi(a, -r)(Rational(0));
                    c += outer * binomial(n - l - j, a) * cauchy_part * poly_cauchy_number(n - j - l - a, k);
                }
            }
            out += xpow(j) * c;
        }
        return out;
    }

    case IdentityId::eq34: {
        // Multinomial convolution of r copies of b_a = b_a(0).
        std::vector<Rational> weight(static_cast<std::size_t>(n) + 1);
        for (int a = 0; a <= n; ++a) {
            std::vector<int> prefix;
            for_each_composition(a, r, prefix, [&](const std::vector<int> &parts) {
                Rational prod = multinomial(a, parts);
                for (int part : parts) {
                    prod *= bernoulli2_number(part);
                }
                weight[static_cast<std::size_t>(a)] += prod;
            });
        }
        for (int j = 0; j <= n; ++j) {
            Rational c;
            for (int l = 0; l <= n - j; ++l) {
                const Rational outer = sign_of(j) * binomial(n, l + j) * stirling1(l + j, j);
                if (outer.is_zero()) {
                    continue;
                }
                for (int a = 0; a <= n - l - j; ++a) {
                    c += outer * binomial(n - l - j, a) * weight[static_cast<std::size_t>(a)]
                         * poly_cauchy_number(n - l - j - a, k);
                }
            }
            out += xpow(j) * c;
        }
        return out;
    }

    case IdentityId::eq35: {
        for (int j = 0; j <= n; ++j) {
            const Rational c = sign_of(n - j) * binomial(n, j) * rising_factorial(n - j)(p.y);
            out += A(j, r, k) * c;
        }
        return out;
    }

    case IdentityId::eq36: {
        const Polynomial a_n = A(n, r, k);
        return shift(a_n, Rational(-1)) - a_n;
    }

    case IdentityId::thm3: {
        out = -(Polynomial::x() * shift(A(n, r, k), Rational(1)));
        for (int m = 0; m <= n; ++m) {
            const Rational s1 = stirling1(n, m);
            if (s1.is_zero()) {
                continue;
            }
            for (int l = 0; l <= m; ++l) {
                for (int a = 0; a <= m - l; ++a) {
                    const Rational c = Rational(r) * sign_of(a) * binomial(m, l) * binomial(m - l, a)
                                       / Rational((a + 2) * (a + 1)) / Rational(l + 1).pow(k) * s1;
                    out += reflect(bernoulli(m - l - a, 1 - r)) * c;
                }
            }
            for (int a = 0; a <= m; ++a) {
                const Rational c = binomial(m, a) * s1 / Rational(a + 2).pow(k);
                // B(-x-1) = q(x+1) with q(x) = B(-x).
                out += shift(reflect(bernoulli(m - a, -r)), Rational(1)) * c;
            }
        }
        return out;
    }

    case IdentityId::thm4:
    case IdentityId::thm4_variant: {
        const bool variant = id == IdentityId::thm4_variant;
        out = -(Polynomial::x() * shift(A(n - 1, r, k), Rational(1)));
        for (int l = 0; l <= n - 1; ++l) {
            for (int a = 0; a <= l; ++a) {
                const Rational c = Rational(r) * sign_of(n - a) * factorial(n - 1 - l) * factorial(l - a)
                                   / Rational(l - a + 2) * binomial(n - 1, l) * binomial(l, a);
                out += A(variant ? a : n, r + 1, k) * c;
            }
        }
        for (int l = 0; l <= n - 1; ++l) {
            const Rational c = Rational(r) * sign_of(n - l - 1) * factorial(n - l - 1) * binomial(n - 1, l);
            out += A(l, r, k) * c;
        }
        out += (shift(A(n, r + 1, k - 1), Rational(1)) - shift(A(n, r + 1, k), Rational(1))) / Rational(n);
        return out;
    }

    case IdentityId::thm5:
    case IdentityId::thm5_variant: {
        const bool variant = id == IdentityId::thm5_variant;
        const int m = p.m;
        const Rational one(1);
        Rational sum;
        for (int l = 0; l <= n - 1 - m; ++l) {
            for (int a = 0; a <= l; ++a) {
                sum += Rational(r) * sign_of(l - a + 1) * factorial(l - a) / Rational(l - a + 2)
                       * binomial(n - 1, l) * binomial(l, a) * stirling1(n - 1 - l, m) * A_at(a, r + 1, k, one);
            }
        }
        for (int l = 0; l <= n - 1 - m; ++l) {
            sum += Rational(r) * binomial(n - 1, l) * stirling1(n - l - 1, m) * A_at(l, r, k, one);
        }
        const Rational inv_m = Rational(1) / Rational(m);
        for (int l = 0; l <= n - m; ++l) {
            sum += inv_m * binomial(n - 1, l) * stirling1(n - l - 1, m - 1) * A_at(l, r, variant ? k - 1 : k, one);
        }
        for (int l = 0; l <= n - m; ++l) {
            sum += (one - inv_m) * binomial(n - 1, l) * stirling1(n - l - 1, m - 1) * A_at(l, r, k, one);
        }
        return Polynomial(sum);
    }

    case IdentityId::eq52: {
        for (int l = 0; l <= n - 1; ++l) {
            const Rational c = sign_of(n + 1) * factorial(n) * sign_of(l + 1) / (Rational(n - l) * factorial(l));
            out += A(l, r, k) * c;
        }
        return out;
    }

    case IdentityId::thm6: {
        const int s = p.s;
        for (int m = 0; m <= n; ++m) {
            Rational c;
            for (int l = 0; l <= n - m; ++l) {
                c += binomial(n, l) * stirling1(n - l, m) * A_at(l, r + s, k, Rational(s));
            }
            out += bernoulli(m, s) * (c * sign_of(m));
        }
        return out;
    }

    case IdentityId::thm7: {
        const int s = p.s;
        const Rational &lambda = p.lambda;
        const Rational scale = (Rational(1) - lambda).pow(-s);
        for (int m = 0; m <= n; ++m) {
            Rational c;
            for (int l = 0; l <= n - m; ++l) {
                const Rational outer = binomial(n, l) * stirling1(n - l, m);
                if (outer.is_zero()) {
                    continue;
                }
                for (int a = 0; a <= s; ++a) {
                    c += (-lambda).pow(a) * binomial(s, a) * outer * A_at(l, r, k, Rational(s - a));
                }
            }
            out += frobenius_euler(m, s, lambda) * (c * sign_of(m) * scale);
        }
        return out;
    }

    case IdentityId::thm8: {
        for (int m = 0; m <= n; ++m) {
            out += rising_factorial(m) * (sign_of(m) * binomial(n, m) * A_at(n - m, r, k, Rational(0)));
        }
        return out;
    }

    case IdentityId::narumi_bernoulli:
        require(n);
        return shift(bernoulli(n, n + r + 1), Rational(1));

    case IdentityId::sheffer_pair_eq17:
        require(n);
        return umbral::sheffer_by_gf(umbral::ShefferPair::mixed(r, k, std::max(n, 1)), n);

    case IdentityId::assoc_eq25: {
        for (int m = 0; m <= n; ++m) {
            out += xpow(m) * (sign_of(m) * stirling1(n, m));
        }
        return out;
    }
    }
    throw std::logic_error("unhandled identity");
}

PointResult Engine::check(IdentityId id, const GridPoint &p)
{
    return check(id, p, GridSpec{}.ys);
}

PointResult Engine::check(IdentityId id, const GridPoint &p, const std::vector<Rational> &ys)
{
    PointResult res;
    res.point = p;
    if (auto why = domain_violation(id, p)) {
        res.verdict = Verdict::skipped;
        res.reason = *why;
        return res;
    }

    auto compare = [&](const GridPoint &q) {
        Polynomial l = lhs(id, q);
        Polynomial r = rhs(id, q);
        if (l == r) {
            return true;
        }
        res.verdict = Verdict::fail;
        res.diff = l - r;
        res.lhs = std::move(l);
        res.rhs = std::move(r);
        return false;
    };

    try {
        if (axes_of(id).y) {
            // Two-variable identity: degree <= n in y, so n+1 distinct
            // evaluation points decide equality.
            const std::set<Rational> distinct(ys.begin(), ys.end());
            if (static_cast<int>(distinct.size()) < p.n + 1) {
                res.verdict = Verdict::skipped;
                res.reason = "insufficient-y-points";
                return res;
            }
            for (const auto &y : ys) {
                GridPoint q = p;
                q.y = y;
                if (!compare(q)) {
                    res.reason = "mismatch at y=" + y.str();
                    return res;
                }
            }
        } else {
            compare(p);
        }
    } catch (const truncation_error &) {
        throw;
    } catch (const std::exception &e) {
        res.verdict = Verdict::fail;
        res.reason = e.what();
    }
    return res;
}

VerificationReport Engine::verify(IdentityId id, const GridSpec &grid, int jobs)
{
    const auto start = std::chrono::steady_clock::now();
    const auto points = enumerate(id, grid);
    require(required_order(id, grid.n.hi));
    m_cache->working_order.store(std::max(m_cache->working_order.load(), required_order(id, grid.n.hi) + 1));

    std::vector<PointResult> results(points.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                results[i] = check(id, points[i], grid.ys);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = points.size();
            }
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    VerificationReport report;
    report.id = id;
    report.grid = grid;
    report.truncation = m_truncation;
    for (const auto &r : results) {
        switch (r.verdict) {
        case Verdict::pass: ++report.totals.pass; break;
        case Verdict::fail: ++report.totals.fail; break;
        case Verdict::skipped: ++report.totals.skipped; break;
        }
    }
    report.results = std::move(results);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<VerificationReport> Engine::verify_variants(IdentityId id, const GridSpec &grid, int jobs)
{
    std::vector<VerificationReport> out;
    for (auto reading : readings_of(id)) {
        out.push_back(verify(reading, grid, jobs));
    }
    return out;
}

} // namespace umbra::identities
