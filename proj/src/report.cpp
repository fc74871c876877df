#include <umbra/report.hpp>

namespace umbra::report
{

using identities::IdentityId;

namespace
{

json range(const identities::IntRange &r)
{
    return json::array({r.lo, r.hi});
}

json rationals(const std::vector<Rational> &v)
{
    json out = json::array();
    for (const auto &q : v) {
        out.push_back(q.str());
    }
    return out;
}

json engine_header(int truncation)
{
    json e;
    e["truncation"] = truncation;
    e["version"] = engine_version;
    return e;
}

json totals(const identities::Totals &t)
{
    json out;
    out["pass"] = t.pass;
    out["fail"] = t.fail;
    out["skipped"] = t.skipped;
    return out;
}

} // namespace

const char *verdict_name(identities::Verdict v)
{
    switch (v) {
    case identities::Verdict::pass: return "pass";
    case identities::Verdict::fail: return "fail";
    case identities::Verdict::skipped: return "skipped";
    }
    return "?";
}

json encode(const Polynomial &p)
{
    json out = json::array();
    for (const auto &c : p.coefficients()) {
        out.push_back(c.str());
    }
    return out;
}

Polynomial decode_polynomial(const json &j)
{
    std::vector<Rational> coeffs;
    for (const auto &c : j) {
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    }
    return Polynomial(std::move(coeffs));
}

json encode(const identities::GridPoint &p, IdentityId id)
{
    const auto ax = identities::axes_of(id);
    json out;
    out["n"] = p.n;
    if (ax.r) {
        out["r"] = p.r;
    }
    if (ax.k) {
        out["k"] = p.k;
    }
    if (ax.s) {
        out["s"] = p.s;
    }
    if (ax.lambda) {
        out["lambda"] = p.lambda.str();
    }
    if (ax.m) {
        out["m"] = p.m;
    }
    return out;
}

json encode(const identities::GridSpec &g, IdentityId id)
{
    const auto ax = identities::axes_of(id);
    json out;
    out["n"] = range(g.n);
    if (ax.r) {
        out["r"] = range(g.r);
    }
    if (ax.k) {
        out["k"] = range(g.k);
    }
    if (ax.s) {
        out["s"] = range(g.s);
    }
    if (ax.lambda) {
        out["lambda"] = rationals(g.lambdas);
    }
    if (ax.m) {
        out["m"] = range(g.m);
    }
    if (ax.y) {
        out["y"] = rationals(g.ys);
    }
    return out;
}

json encode(const identities::VerificationReport &r)
{
    json out;
    out["identity"] = std::string(identities::name(r.id));
    out["variant"] = identities::is_variant(r.id);
    out["grid"] = encode(r.grid, r.id);
    out["engine"] = engine_header(r.truncation);
    json results = json::array();
    for (const auto &pr : r.results) {
        json entry;
        entry["point"] = encode(pr.point, r.id);
        entry["verdict"] = verdict_name(pr.verdict);
        if (!pr.reason.empty()) {
            entry["reason"] = pr.reason;
        }
        if (pr.verdict == identities::Verdict::fail) {
            entry["lhs"] = encode(pr.lhs);
            entry["rhs"] = encode(pr.rhs);
            entry["diff"] = encode(pr.diff);
        }
        results.push_back(std::move(entry));
    }
    out["results"] = std::move(results);
    out["totals"] = totals(r.totals);
    out["passed"] = r.passed();
    return out;
}

json encode_suite(const std::vector<identities::VerificationReport> &reports, int truncation)
{
    json out;
    out["engine"] = engine_header(truncation);
    json list = json::array();
    identities::Totals sum;
    for (const auto &r : reports) {
        list.push_back(encode(r));
        sum.pass += r.totals.pass;
        sum.fail += r.totals.fail;
        sum.skipped += r.totals.skipped;
    }
    out["reports"] = std::move(list);
    out["totals"] = totals(sum);
    return out;
}

std::string dump(const json &doc)
{
    return doc.dump(2) + "\n";
}

} // namespace umbra::report
