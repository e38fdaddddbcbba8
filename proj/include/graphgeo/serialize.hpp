#pragma once

#include <string>

#include <json.hpp>

#include "graphgeo/circuits.hpp"
#include "graphgeo/experiment.hpp"

namespace graphgeo {

inline constexpr const char* kToolName = "graphgeo";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json tool_info();

nlohmann::json to_json(const SweepResult& result, const WeightedGraph& g);

// phi,p_est,stderr with a header row; values at 17 significant digits.
std::string sweep_to_csv(const SweepResult& result);

nlohmann::json to_json(const CircuitDescription& c);

}  // namespace graphgeo
