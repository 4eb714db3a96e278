#pragma once

// JSON (de)serialization of report values.  Every to_json has a matching
// from_json and the pair round-trips losslessly; field order is fixed by
// nlohmann::ordered_json so serialized output is byte-deterministic.

#include <json.hpp>

#include "jacq/engine.hpp"

namespace jacq {

using Json = nlohmann::ordered_json;

Json to_json(const CharacterSpec& chi);
CharacterSpec character_from_json(const Json& j);

Json to_json(const WitnessReport& w);
WitnessReport witness_from_json(const Json& j);

Json to_json(const ClassificationReport& rep);
ClassificationReport classification_from_json(const Json& j);

Json to_json(const std::vector<TableRow>& rows);
std::vector<TableRow> table_from_json(const Json& j);

Json to_json(const CurveReport& rep);
CurveReport curve_report_from_json(const Json& j);

Json to_json(const GroupOrdersReport& rep);
GroupOrdersReport group_orders_from_json(const Json& j);

// check-bound output, assembled by the CLI
struct BoundReport {
  int genus = 0;
  std::string kind;  // "certified" or "requires-exhaustive"
  std::string threshold_low, threshold_high;  // exact rationals "p/q"
  bool cos_certified = false;
  std::string min_margin;  // high-precision decimal

  bool operator==(const BoundReport&) const = default;
};
Json to_json(const BoundReport& rep);
BoundReport bound_from_json(const Json& j);

}  // namespace jacq
