#pragma once

#include <string>

#include <json.hpp>

#include "hyperconn/conditions.hpp"
#include "hyperconn/hypergraph.hpp"
#include "hyperconn/realizations.hpp"

namespace hyperconn {

/// Bounds that fit in int64 are numbers, larger ones decimal strings.
nlohmann::json bound_to_json(const BigInt& value);

nlohmann::json to_json(const CrossingProfile& p);
nlohmann::json to_json(const Theorem42Params& p);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const Hypergraph& h);
nlohmann::json to_json(const ForcibleResult& result);

/// One-line human summary, e.g. "violated T23-4 at j=3".
std::string verdict_summary(const Verdict& v);

/// Indented clause listing for text output; empty when satisfied.
std::string verdict_details(const Verdict& v);

}  // namespace hyperconn
