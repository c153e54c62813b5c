#pragma once

#include <json.hpp>

#include "arexit/minimizer.hpp"
#include "arexit/model.hpp"
#include "arexit/montecarlo.hpp"

namespace arexit {

// JSON forms, e.g.
//   {"map": {"family": "dead_zone", "a": 0.5, "b": 0.2}, "noise": {"family": "gaussian"},
//    "epsilon": 0.1, "half_width": 1.0, "start": 0.0}
// Malformed or out-of-domain input throws DomainError.

nlohmann::json to_json(const MapSpec& map);
MapSpec map_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NoiseSpec& noise);
NoiseSpec noise_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ProcessConfig& cfg);
ProcessConfig process_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MinimizerConfig& cfg);
nlohmann::json to_json(const McConfig& cfg);

}  // namespace arexit
