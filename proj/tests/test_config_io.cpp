#include <doctest.h>

#include "srs/config_io.hpp"

using namespace srs;

TEST_CASE("default config file loads with expected values") {
  RobotConfig cfg = load_robot_config(std::string(SRS_DATA_DIR) + "/robot_default.json");
  CHECK(cfg.modules[0].L0 == doctest::Approx(0.15));
  CHECK(cfg.modules[1].r == doctest::Approx(0.0125));
  CHECK(cfg.modules[2].sigma == doctest::Approx(M_PI / 3));
  CHECK(cfg.modules[0].l_max == doctest::Approx(0.065));
  CHECK(cfg.body_radius == doctest::Approx(0.0125));
  CHECK(cfg.pressure_gain == doctest::Approx(100.0));
  CHECK(cfg.pressure_max == doctest::Approx(4.0));
  CHECK(cfg.deadzone == doctest::Approx(1.0));
}

TEST_CASE("unknown keys are rejected") {
  const char* text = R"({
    "modules": [
      {"L0": 0.15, "r": 0.0125, "sigma": 0.0, "delta": 0.0, "l_max": 0.065},
      {"L0": 0.15, "r": 0.0125, "sigma": 0.0, "delta": 0.0, "l_max": 0.065},
      {"L0": 0.15, "r": 0.0125, "sigma": 0.0, "delta": 0.0, "l_max": 0.065}
    ],
    "body_radius": 0.0125, "pressure_gain": 100.0,
    "pressure_max": 4.0, "deadzone": 1.0, "color": "green"
  })";
  CHECK_THROWS_WITH_AS(robot_config_from_json(text),
                       doctest::Contains("unknown key"), std::invalid_argument);
}

TEST_CASE("wrong module count is rejected") {
  const char* text = R"({
    "modules": [
      {"L0": 0.15, "r": 0.0125, "sigma": 0.0, "delta": 0.0, "l_max": 0.065}
    ],
    "body_radius": 0.0125, "pressure_gain": 100.0,
    "pressure_max": 4.0, "deadzone": 1.0
  })";
  CHECK_THROWS(robot_config_from_json(text));
}

TEST_CASE("invariant violations are rejected") {
  RobotConfig cfg;
  cfg.deadzone = 5.0;  // > pressure_max
  CHECK_THROWS(cfg.validate());
  cfg = RobotConfig{};
  cfg.modules[1].L0 = -1.0;
  CHECK_THROWS(cfg.validate());
}

TEST_CASE("digest is stable and config-sensitive") {
  RobotConfig a, b;
  CHECK(config_digest(a) == config_digest(b));
  b.pressure_max = 3.5;
  CHECK(config_digest(a) != config_digest(b));
}
