#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "srs/estimator.hpp"

using namespace srs;

namespace {

std::vector<VelocityRecord> shipped_table() {
  return load_velocity_table(std::string(SRS_DATA_DIR) + "/measured_velocities.csv");
}

}  // namespace

TEST_CASE("predict_velocity: rolling displacement law") {
  RobotConfig cfg;
  auto pred = predict_velocity(GaitKind::roll_inward, cfg, 4.0, 1.0);
  CHECK(pred.speed_cm_s == doctest::Approx(7.853982).epsilon(1e-6));
  CHECK(pred.direction == DirectionClass::lateral_inward);
}

TEST_CASE("predict_velocity: deadzone suppresses all motion") {
  RobotConfig cfg;
  for (GaitKind g :
       {GaitKind::serpentine, GaitKind::roll_inward, GaitKind::roll_outward}) {
    auto pred = predict_velocity(g, cfg, 1.0, 0.75);
    CHECK(pred.speed_cm_s == 0.0);
    CHECK(pred.direction == DirectionClass::none);
  }
}

TEST_CASE("predict_velocity: serpentine null result under isotropic friction") {
  RobotConfig cfg;
  auto pred = predict_velocity(GaitKind::serpentine, cfg, 4.0, 0.25);
  CHECK(pred.speed_cm_s == 0.0);
}

TEST_CASE("predict_velocity is homogeneous in frequency for rolling") {
  RobotConfig cfg;
  for (double f : {0.25, 0.5, 1.0}) {
    auto a = predict_velocity(GaitKind::roll_outward, cfg, 3.0, f);
    auto b = predict_velocity(GaitKind::roll_outward, cfg, 3.0, 2 * f);
    CHECK(b.speed_cm_s == doctest::Approx(2 * a.speed_cm_s).epsilon(1e-12));
  }
}

TEST_CASE("shipped table has the full 48-record grid") {
  auto table = shipped_table();
  CHECK(table.size() == 48);
}

TEST_CASE("comparison report arithmetic") {
  RobotConfig cfg;
  auto report = compare_with_measured(cfg, shipped_table());
  REQUIRE(report.rows.size() == 48);

  bool found = false;
  for (const auto& row : report.rows) {
    if (row.gait == GaitKind::roll_inward && row.pressure_amplitude == 4.0 &&
        row.frequency == 1.0) {
      found = true;
      CHECK(row.measured_cm_s == doctest::Approx(11.56).epsilon(1e-3));
      CHECK(row.predicted_cm_s == doctest::Approx(7.853982).epsilon(1e-6));
      REQUIRE(row.ratio.has_value());
      CHECK(*row.ratio == doctest::Approx(1.472).epsilon(1e-3));
    }
    if (row.pressure_amplitude == 1.0) {
      CHECK(row.measured_cm_s == 0.0);
      CHECK(row.predicted_cm_s == 0.0);
      CHECK_FALSE(row.ratio.has_value());
      CHECK(row.deadzone);
    }
  }
  CHECK(found);
  CHECK(report.rolling_speed_increases_with_frequency);
  CHECK(report.serpentine_much_slower_than_rolling);
}

TEST_CASE("serpentine creeps while rolling travels") {
  RobotConfig cfg;
  auto report = compare_with_measured(cfg, shipped_table());
  double serp = 0, roll = 0;
  for (const auto& row : report.rows) {
    if (row.pressure_amplitude == 4.0 && row.frequency == 0.25) {
      if (row.gait == GaitKind::serpentine) serp = row.measured_cm_s;
      if (row.gait == GaitKind::roll_inward) roll = row.measured_cm_s;
    }
  }
  CHECK(serp == doctest::Approx(0.84).epsilon(1e-2));
  CHECK(roll == doctest::Approx(8.17).epsilon(1e-3));
  CHECK(serp < roll / 5.0);
}

TEST_CASE("incomplete table is rejected") {
  RobotConfig cfg;
  auto table = shipped_table();
  table.pop_back();
  CHECK_THROWS(compare_with_measured(cfg, table));
}

TEST_CASE("malformed table file names the line") {
  const std::string path = "/tmp/srs_test_badtable.csv";
  {
    std::ofstream out(path);
    out << "gait,pressure_bar,frequency_hz,vx_cm_s,vy_cm_s\n";
    out << "serpentine,1.0,0.25,zero,0.00\n";
  }
  CHECK_THROWS_WITH_AS(load_velocity_table(path), doctest::Contains("line 2"),
                       std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("report serializes to JSON and text") {
  RobotConfig cfg;
  auto report = compare_with_measured(cfg, shipped_table());
  const std::string path = "/tmp/srs_test_report.json";
  export_report_json(report, path);
  std::ifstream in(path);
  CHECK(in.good());
  std::string text = report_to_text(report);
  CHECK(text.find("roll_inward") != std::string::npos);
  CHECK(text.find("yes") != std::string::npos);
  std::remove(path.c_str());
}
