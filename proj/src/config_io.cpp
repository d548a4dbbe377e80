#include "srs/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace srs {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!known.count(it.key()))
      throw std::invalid_argument("config: unknown key \"" + it.key() +
                                  "\" in " + where);
}

ModuleConfig module_from_json(const json& j) {
  reject_unknown_keys(j, {"L0", "r", "sigma", "delta", "l_max"}, "module");
  ModuleConfig m;
  m.L0 = j.at("L0").get<double>();
  m.r = j.at("r").get<double>();
  m.sigma = j.at("sigma").get<double>();
  m.delta = j.at("delta").get<double>();
  m.l_max = j.at("l_max").get<double>();
  return m;
}

}  // namespace

RobotConfig robot_config_from_json(const std::string& text) {
  json j = json::parse(text);
  reject_unknown_keys(j,
                      {"modules", "body_radius", "pressure_gain",
                       "pressure_max", "deadzone"},
                      "robot config");
  RobotConfig cfg;
  const auto& mods = j.at("modules");
  if (!mods.is_array() || mods.size() != 3)
    throw std::invalid_argument("config: \"modules\" must be an array of 3");
  for (int i = 0; i < 3; ++i) cfg.modules[i] = module_from_json(mods[i]);
  cfg.body_radius = j.at("body_radius").get<double>();
  cfg.pressure_gain = j.at("pressure_gain").get<double>();
  cfg.pressure_max = j.at("pressure_max").get<double>();
  cfg.deadzone = j.at("deadzone").get<double>();
  cfg.validate();
  return cfg;
}

RobotConfig load_robot_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return robot_config_from_json(ss.str());
}

std::string robot_config_to_json(const RobotConfig& cfg) {
  json mods = json::array();
  for (const auto& m : cfg.modules)
    mods.push_back({{"L0", m.L0},
                    {"r", m.r},
                    {"sigma", m.sigma},
                    {"delta", m.delta},
                    {"l_max", m.l_max}});
  json j{{"modules", mods},
         {"body_radius", cfg.body_radius},
         {"pressure_gain", cfg.pressure_gain},
         {"pressure_max", cfg.pressure_max},
         {"deadzone", cfg.deadzone}};
  return j.dump();
}

std::string config_digest(const RobotConfig& cfg) {
  const std::string s = robot_config_to_json(cfg);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

}  // namespace srs
