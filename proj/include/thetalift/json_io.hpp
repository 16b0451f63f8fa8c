#pragma once

#include <vector>

#include <json.hpp>

#include "thetalift/blocks.hpp"
#include "thetalift/borcherds.hpp"
#include "thetalift/hecke.hpp"
#include "thetalift/valuation.hpp"
#include "thetalift/verify.hpp"

namespace thetalift {

using Json = nlohmann::ordered_json;

/// Rationals are written as decimal strings, "p" or "p/q".
std::string rational_string(const Rational& x);

/// {"qden", "trunc", "terms": [{"q", "z2", "num", "den"}]} sorted by (q, z2).
Json to_json(const FJSeries& f);
FJSeries fjseries_from_json(const Json& j);

Json to_json(const FJExpansion& e);
Json to_json(const ThetaBlockSpec& spec);
Json to_json(const OrdProfile& p);
Json to_json(const SingularTable& table);
Json to_json(const BorcherdsData& d);
Json to_json(const std::vector<HumbertClass>& divisor);
Json to_json(const FJComparison& cmp);
Json to_json(const SupportHull& h);
/// Timings are opt-in so that identical runs give identical bytes.
Json to_json(const std::vector<VerificationReport>& reports, bool withTiming = false);

}  // namespace thetalift
