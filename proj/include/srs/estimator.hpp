#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srs/gait.hpp"
#include "srs/types.hpp"

namespace srs {

struct VelocityRecord {
  GaitKind gait = GaitKind::serpentine;
  double pressure_amplitude = 0.0;  // bar, one of {1,2,3,4}
  double frequency = 0.0;           // Hz, one of {0.25,0.5,0.75,1.0}
  double v_x = 0.0;                 // cm/s
  double v_y = 0.0;                 // cm/s
};

enum class DirectionClass { none, lateral_inward, lateral_outward };

struct VelocityPrediction {
  double speed_cm_s = 0.0;
  DirectionClass direction = DirectionClass::none;
};

struct EstimateRow {
  GaitKind gait;
  double pressure_amplitude;
  double frequency;
  double measured_cm_s;   // magnitude sqrt(vx^2 + vy^2)
  double predicted_cm_s;
  std::optional<double> ratio;  // measured / predicted, absent when measured = 0
  bool deadzone;
};

struct EstimateReport {
  std::vector<EstimateRow> rows;
  // trend: speed at the highest frequency exceeds the lowest, per
  // (rolling gait, pressure >= 2 bar) group
  bool rolling_speed_increases_with_frequency = false;
  bool serpentine_much_slower_than_rolling = false;  // < 1/5 at matched settings
};

/// No-slip kinematic prediction: rolling travels 2 pi body_radius per cycle;
/// serpentine produces no net motion under isotropic friction; pressure at or
/// below the deadzone produces no bending at all.
VelocityPrediction predict_velocity(GaitKind gait, const RobotConfig& cfg,
                                    double pressure_amplitude, double frequency);

/// Builds the per-record comparison against measured data. Requires the full
/// 48-record grid (3 gaits x 4 pressures x 4 frequencies).
EstimateReport compare_with_measured(const RobotConfig& cfg,
                                     const std::vector<VelocityRecord>& table);

/// CSV with header gait,pressure_bar,frequency_hz,vx_cm_s,vy_cm_s.
std::vector<VelocityRecord> load_velocity_table(const std::string& path);

void export_report_json(const EstimateReport& report, const std::string& path);
std::string report_to_text(const EstimateReport& report);

}  // namespace srs
