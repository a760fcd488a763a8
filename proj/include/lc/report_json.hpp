#pragma once

#include <json.hpp>

#include "lc/engine.hpp"

namespace lc {

using Json = nlohmann::ordered_json;

Json theta_to_json(const ParamPoint& th);
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json report_to_json(const VerificationReport& rep);
/// Aggregate document for a verify-all run; key order is fixed so equal
/// inputs serialize byte-identically.
Json aggregate_to_json(const std::vector<VerificationReport>& reports,
                       const GridSpec& grid);

Json membership_to_json(const MembershipReport& rep);

/// Registry dump: families, parameters, table formulas, Pearson data where
/// registered, and the constellation relation edges.
Json families_to_json();

}  // namespace lc
