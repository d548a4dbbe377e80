#include "srs/estimator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace srs {

using nlohmann::json;

VelocityPrediction predict_velocity(GaitKind gait, const RobotConfig& cfg,
                                    double pressure_amplitude, double frequency) {
  if (!(pressure_amplitude > 0) || !(frequency > 0))
    throw std::invalid_argument("predict_velocity: inputs must be positive");
  VelocityPrediction out;
  if (pressure_amplitude <= cfg.deadzone) return out;  // no bending
  if (gait == GaitKind::serpentine) return out;  // isotropic friction: no thrust
  out.speed_cm_s = 2.0 * M_PI * cfg.body_radius * frequency * 100.0;
  out.direction = gait == GaitKind::roll_inward ? DirectionClass::lateral_inward
                                                : DirectionClass::lateral_outward;
  return out;
}

EstimateReport compare_with_measured(const RobotConfig& cfg,
                                     const std::vector<VelocityRecord>& table) {
  if (table.size() != 48)
    throw std::invalid_argument("compare_with_measured: expected 48 records, got " +
                                std::to_string(table.size()));
  EstimateReport report;
  // (gait, pressure, frequency) -> measured magnitude, for the summary checks
  std::map<std::tuple<int, double, double>, double> measured;

  for (const auto& rec : table) {
    EstimateRow row;
    row.gait = rec.gait;
    row.pressure_amplitude = rec.pressure_amplitude;
    row.frequency = rec.frequency;
    row.measured_cm_s = std::hypot(rec.v_x, rec.v_y);
    auto pred = predict_velocity(rec.gait, cfg, rec.pressure_amplitude,
                                 rec.frequency);
    row.predicted_cm_s = pred.speed_cm_s;
    row.deadzone = rec.pressure_amplitude <= cfg.deadzone;
    if (row.measured_cm_s > 0.0 && row.predicted_cm_s > 0.0)
      row.ratio = row.measured_cm_s / row.predicted_cm_s;
    measured[{static_cast<int>(rec.gait), rec.pressure_amplitude,
              rec.frequency}] = row.measured_cm_s;
    report.rows.push_back(row);
  }

  const std::array<double, 4> freqs{0.25, 0.5, 0.75, 1.0};
  const std::array<double, 3> pressures{2.0, 3.0, 4.0};

  report.rolling_speed_increases_with_frequency = true;
  for (GaitKind g : {GaitKind::roll_inward, GaitKind::roll_outward})
    for (double p : pressures) {
      const double lo = measured.at({static_cast<int>(g), p, freqs.front()});
      const double hi = measured.at({static_cast<int>(g), p, freqs.back()});
      if (!(hi > lo)) report.rolling_speed_increases_with_frequency = false;
    }

  report.serpentine_much_slower_than_rolling = true;
  for (double p : pressures)
    for (double f : freqs) {
      const double serp =
          measured.at({static_cast<int>(GaitKind::serpentine), p, f});
      for (GaitKind g : {GaitKind::roll_inward, GaitKind::roll_outward}) {
        const double roll = measured.at({static_cast<int>(g), p, f});
        if (!(serp < roll / 5.0))
          report.serpentine_much_slower_than_rolling = false;
      }
    }
  return report;
}

std::vector<VelocityRecord> load_velocity_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("velocity table: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) ||
      line != "gait,pressure_bar,frequency_hz,vx_cm_s,vy_cm_s")
    throw std::runtime_error("velocity table: " + path + ": bad header");
  std::vector<VelocityRecord> records;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string gait, field;
    std::getline(ss, gait, ',');
    VelocityRecord rec;
    try {
      rec.gait = gait_kind_from_string(gait);
      std::getline(ss, field, ',');
      rec.pressure_amplitude = std::stod(field);
      std::getline(ss, field, ',');
      rec.frequency = std::stod(field);
      std::getline(ss, field, ',');
      rec.v_x = std::stod(field);
      std::getline(ss, field, ',');
      rec.v_y = std::stod(field);
    } catch (const std::exception& e) {
      throw std::runtime_error("velocity table: " + path + ": line " +
                               std::to_string(lineno) + ": " + e.what());
    }
    records.push_back(rec);
  }
  return records;
}

namespace {

json row_to_json(const EstimateRow& row) {
  json j{{"gait", to_string(row.gait)},
         {"pressure_bar", row.pressure_amplitude},
         {"frequency_hz", row.frequency},
         {"measured_cm_s", row.measured_cm_s},
         {"predicted_cm_s", row.predicted_cm_s},
         {"deadzone", row.deadzone}};
  if (row.ratio) j["ratio"] = *row.ratio;
  return j;
}

}  // namespace

void export_report_json(const EstimateReport& report, const std::string& path) {
  json rows = json::array();
  for (const auto& r : report.rows) rows.push_back(row_to_json(r));
  json j{{"rows", rows},
         {"rolling_speed_increases_with_frequency",
          report.rolling_speed_increases_with_frequency},
         {"serpentine_much_slower_than_rolling",
          report.serpentine_much_slower_than_rolling}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("export_report_json: cannot open " + path);
  out << j.dump(2) << '\n';
}

std::string report_to_text(const EstimateReport& report) {
  std::ostringstream out;
  out << "gait          P(bar)  f(Hz)  measured(cm/s)  predicted(cm/s)  ratio\n";
  out.precision(3);
  out << std::fixed;
  for (const auto& r : report.rows) {
    out << to_string(r.gait);
    for (size_t i = to_string(r.gait).size(); i < 14; ++i) out << ' ';
    out << r.pressure_amplitude << "    " << r.frequency << "   "
        << r.measured_cm_s << "           " << r.predicted_cm_s << "            ";
    if (r.ratio)
      out << *r.ratio;
    else
      out << "-";
    if (r.deadzone) out << "  (deadzone)";
    out << '\n';
  }
  out << "rolling speed increases with frequency: "
      << (report.rolling_speed_increases_with_frequency ? "yes" : "no") << '\n';
  out << "serpentine < 1/5 of rolling at matched settings: "
      << (report.serpentine_much_slower_than_rolling ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace srs
