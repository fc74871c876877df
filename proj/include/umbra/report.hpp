#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <umbra/identities.hpp>
#include <umbra/polynomial.hpp>

// JSON encoding of verification reports. Key order is fixed and no
// timing data is written, so equal results give byte-identical documents.
namespace umbra::report
{

using json = nlohmann::ordered_json;

inline constexpr const char *engine_version = "1.0.0";

// Exact "num/den" strings from the constant term upward.
json encode(const Polynomial &p);
Polynomial decode_polynomial(const json &j);

json encode(const identities::GridPoint &p, identities::IdentityId id);
json encode(const identities::GridSpec &g, identities::IdentityId id);
json encode(const identities::VerificationReport &r);

// Several reports under one engine header, as written by `verify all`.
json encode_suite(const std::vector<identities::VerificationReport> &reports, int truncation);

// Two-space indented text with a trailing newline.
std::string dump(const json &doc);

const char *verdict_name(identities::Verdict v);

} // namespace umbra::report
