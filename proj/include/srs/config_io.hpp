#pragma once

#include <string>

#include "srs/types.hpp"

namespace srs {

/// Parse a RobotConfig from JSON text. Unknown keys are rejected.
RobotConfig robot_config_from_json(const std::string& text);

/// Load a RobotConfig from a JSON file.
RobotConfig load_robot_config(const std::string& path);

std::string robot_config_to_json(const RobotConfig& cfg);

/// FNV-1a hash of the canonical config JSON, as a hex string. Stored in
/// trajectory metadata so runs can be traced back to a configuration.
std::string config_digest(const RobotConfig& cfg);

}  // namespace srs
