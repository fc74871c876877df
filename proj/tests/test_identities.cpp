#include <doctest.h>

#include <umbra/errors.hpp>
#include <umbra/families.hpp>
#include <umbra/identities.hpp>
#include <umbra/report.hpp>

#include "helpers.hpp"

using namespace umbra;
using namespace umbra::identities;

TEST_CASE("identity names")
{
    CHECK(name(IdentityId::thm4_variant) == "THM4_VARIANT");
    CHECK(parse_identity("eq35") == IdentityId::eq35);
    CHECK(parse_identity("Sheffer_Pair_Eq17") == IdentityId::sheffer_pair_eq17);
    CHECK_FALSE(parse_identity("thm9").has_value());
    for (IdentityId id : all_identities) {
        CHECK(parse_identity(name(id)) == id);
    }
    CHECK(readings_of(IdentityId::thm5) == std::vector{IdentityId::thm5, IdentityId::thm5_variant});
    CHECK(readings_of(IdentityId::thm1) == std::vector{IdentityId::thm1});
    CHECK(base_of(IdentityId::thm4_variant) == IdentityId::thm4);
}

TEST_CASE("grids")
{
    GridSpec g;
    g.n = {0, 1};
    g.r = {0, 1};
    g.k = {2, 2};
    const auto pts = enumerate(IdentityId::thm1, g);
    REQUIRE(pts.size() == 4);
    CHECK(pts[1].n == 0);
    CHECK(pts[1].r == 1);
    CHECK(pts[2].n == 1);
    CHECK(pts[2].r == 0);
    CHECK(enumerate(IdentityId::narumi_bernoulli, g).size() == 4);

    g.n = {3, 2};
    CHECK_THROWS_AS(validate(g), std::invalid_argument);
    g.n = {-1, 2};
    CHECK_THROWS_AS(validate(g), std::invalid_argument);
    g = GridSpec{};
    g.lambdas.clear();
    CHECK_THROWS_AS(validate(g), std::invalid_argument);
}

TEST_CASE("domains")
{
    GridPoint p;
    p.n = 3;
    p.m = 0;
    CHECK(domain_violation(IdentityId::thm5, p).has_value());
    p.m = 3;
    CHECK(domain_violation(IdentityId::thm5, p).has_value());
    p.m = 1;
    CHECK_FALSE(domain_violation(IdentityId::thm5, p).has_value());
    p.r = -1;
    CHECK(domain_violation(IdentityId::thm1, p).has_value());
    CHECK_FALSE(domain_violation(IdentityId::thm2, p).has_value());
    p.lambda = Rational(1);
    CHECK(domain_violation(IdentityId::thm7, p).has_value());

    Engine engine;
    p = GridPoint{};
    p.n = 4;
    p.m = 0;
    const auto result = engine.check(IdentityId::thm5, p);
    CHECK(result.verdict == Verdict::skipped);
    CHECK(result.reason.find("out-of-domain") != std::string::npos);
    CHECK_THROWS_AS(engine.rhs(IdentityId::thm5, p), std::domain_error);
}

TEST_CASE("both sides at single points")
{
    Engine engine;
    GridPoint p;
    p.n = 2;
    p.r = 1;
    p.k = 1;
    CHECK(engine.lhs(IdentityId::thm8, p) == P({"1/6", "-1", "1"}));
    CHECK(engine.rhs(IdentityId::thm8, p) == P({"1/6", "-1", "1"}));
    CHECK(engine.rhs(IdentityId::eq36, p) == P({"2", "-2"}));
    CHECK(engine.A(3, 2, -1) == families::mixed_A(3, 2, -1));
    CHECK(engine.A_at(2, 1, 1, Rational(1)) == Rational(1, 6));

    p.n = 3;
    p.m = 1;
    const auto variant = engine.check(IdentityId::thm5_variant, p);
    CHECK(variant.verdict == Verdict::pass);
    CHECK(engine.lhs(IdentityId::thm5_variant, p) == engine.rhs(IdentityId::thm5_variant, p));
}

TEST_CASE("identities that hold on their declared grids")
{
    Engine engine;
    for (IdentityId id : {IdentityId::thm1, IdentityId::thm2, IdentityId::eq32, IdentityId::eq34, IdentityId::eq35,
                          IdentityId::eq36, IdentityId::thm3, IdentityId::eq52, IdentityId::thm6, IdentityId::thm7,
                          IdentityId::thm8, IdentityId::narumi_bernoulli, IdentityId::sheffer_pair_eq17,
                          IdentityId::assoc_eq25}) {
        CAPTURE(name(id));
        const auto report = engine.verify(id, default_grid(id), 4);
        CHECK(report.passed());
        CHECK(report.totals.fail == 0);
    }
}

TEST_CASE("smaller grids")
{
    Engine engine;
    GridSpec g = default_grid(IdentityId::sheffer_pair_eq17);
    g.n = {0, 6};
    g.r = {0, 2};
    g.k = {-1, 2};
    CHECK(engine.verify(IdentityId::sheffer_pair_eq17, g).totals == Totals{84, 0, 0});

    g = default_grid(IdentityId::eq35);
    g.r = {0, 2};
    g.k = {1, 2};
    CHECK(engine.verify(IdentityId::eq35, g).totals == Totals{54, 0, 0});

    g = default_grid(IdentityId::thm7);
    g.n = {0, 6};
    g.s = {0, 2};
    CHECK(engine.verify(IdentityId::thm7, g).passed());
}

// Verdicts of the two readings of THM4 and THM5, pinned from the full run.
TEST_CASE("base and variant readings")
{
    Engine engine;
    const auto thm4 = engine.verify_variants(IdentityId::thm4, default_grid(IdentityId::thm4), 4);
    REQUIRE(thm4.size() == 2);
    CHECK(thm4[0].id == IdentityId::thm4);
    CHECK(thm4[0].totals == Totals{36, 180, 36});
    CHECK_FALSE(thm4[0].passed());
    CHECK(thm4[1].totals == Totals{216, 0, 36});
    CHECK(thm4[1].passed());
    for (const auto &r : thm4[0].results) {
        if (r.verdict == Verdict::pass) {
            CHECK(r.point.r == 0);
        }
    }

    const auto thm5 = engine.verify_variants(IdentityId::thm5, default_grid(IdentityId::thm5), 4);
    REQUIRE(thm5.size() == 2);
    CHECK(thm5[0].totals == Totals{17, 523, 1224});
    CHECK(thm5[1].totals == Totals{540, 0, 1224});
    CHECK(thm5[1].passed());

    const auto failure = std::find_if(thm5[0].results.begin(), thm5[0].results.end(),
                                      [](const PointResult &r) { return r.verdict == Verdict::fail; });
    REQUIRE(failure != thm5[0].results.end());
    CHECK(failure->diff == failure->lhs - failure->rhs);
    CHECK_FALSE(failure->diff.is_zero());
}

TEST_CASE("truncation limits")
{
    Engine engine(6);
    GridSpec g = default_grid(IdentityId::thm1);
    g.n = {0, 8};
    CHECK_THROWS_AS(engine.verify(IdentityId::thm1, g), truncation_error);
    g.n = {0, 6};
    CHECK(engine.verify(IdentityId::thm1, g).passed());
    CHECK(Engine::required_order(IdentityId::thm3, 6) == 7);
}

TEST_CASE("worker count does not change the report")
{
    Engine a, b;
    for (IdentityId id : {IdentityId::thm2, IdentityId::thm5, IdentityId::thm7}) {
        const auto one = report::dump(report::encode(a.verify(id, default_grid(id), 1)));
        const auto eight = report::dump(report::encode(b.verify(id, default_grid(id), 8)));
        CHECK(one == eight);
    }
}
