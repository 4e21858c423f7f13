#pragma once

#include <json.hpp>
#include <string>

#include "projinv/cochain.hpp"
#include "projinv/homography.hpp"
#include "projinv/image.hpp"
#include "projinv/invariants.hpp"
#include "projinv/jet_config.hpp"
#include "projinv/moving_frame.hpp"
#include "projinv/relative.hpp"
#include "projinv/verification.hpp"

namespace projinv {

using json = nlohmann::json;

// configuration file schema: {"points": [{"x":..,"y":..,"p":..,"q":..}, ...]}
json config_to_json(const JetConfiguration& cfg);
JetConfiguration config_from_json(const json& j);
JetConfiguration load_config(const std::string& path);
void save_config(const JetConfiguration& cfg, const std::string& path, int indent = 2);

// homography file schema: {"matrix": [[..],[..],[..]]}, canonicalized on load
json homography_to_json(const Homography& g);
Homography homography_from_json(const json& j);
Homography load_homography(const std::string& path);
void save_homography(const Homography& g, const std::string& path, int indent = 2);

json to_json(const GeneralPositionReport& report);
json to_json(const FrameParameters& params);
json to_json(const InvariantVector& inv);
json to_json(const IotaCoordinates& iota);
json to_json(const RelativeInvariantValue& value);
json to_json(const RelativeCheckReport& report);
json to_json(const RankReport& report);
json to_json(const TrialReport& report);
json to_json(const HomotopyReport& report);
json to_json(const McReport& report);

}  // namespace projinv
