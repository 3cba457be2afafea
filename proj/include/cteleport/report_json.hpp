#pragma once

#include <vector>

#include "json.hpp"

#include "cteleport/entanglement.hpp"
#include "cteleport/partition_scan.hpp"
#include "cteleport/state.hpp"
#include "cteleport/teleport.hpp"

// JSON shapes of the reports. Keys keep insertion order; doubles are
// written in shortest round-trip form, so reading them back is exact.
namespace cteleport {

using Json = nlohmann::ordered_json;

Json to_json(const RoleAssignment& assign);
Json to_json(const PureState& s);
Json to_json(const PurityReport& report);
Json to_json(const CriterionReport& report);
Json to_json(const std::vector<TeleportationRecord>& records);
Json to_json(const ScanReport& report);
Json to_json(const ThetaClassification& c);

// "13" for the pair (1, 3).
std::string pair_key(const QubitPair& pair);

}  // namespace cteleport
