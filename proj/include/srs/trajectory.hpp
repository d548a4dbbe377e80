#pragma once

#include <string>
#include <vector>

#include "srs/fitter.hpp"
#include "srs/gait.hpp"
#include "srs/types.hpp"

namespace srs {

struct TrajectorySample {
  double t = 0.0;  // s
  Vector9d q = Vector9d::Zero();  // length changes, m
  Vector9d p = Vector9d::Zero();  // pressures, bar
};

struct Trajectory {
  GaitKind gait = GaitKind::roll_inward;
  double period = 1.0;  // s
  int cycles = 1;
  double amplitude_scale = 1.0;
  std::string config_digest;
  std::vector<TrajectorySample> samples;
};

struct PressureFlags {
  bool clamped = false;   // some computed pressure exceeded pressure_max
  bool deadzone = false;  // some nonzero pressure fell below the deadzone
};

/// P_ij = pressure_gain * l_ij, clamped to [0, pressure_max].
Vector9d pressure_map(const JointVector& q, const RobotConfig& cfg,
                      PressureFlags* flags = nullptr);

/// Tiles the fitted one-cycle sequence `cycles` times at step
/// period / len(fits). Outward rolling reverses the per-cycle sample order.
Trajectory build_trajectory(const std::vector<FitResult>& fits,
                            const GaitSpec& spec, const RobotConfig& cfg,
                            int cycles);

/// Circular moving average per joint channel within each cycle; window must
/// be odd and no larger than the cycle length. Pressures are recomputed.
Trajectory smooth(const Trajectory& traj, int window, const RobotConfig& cfg);

void export_trajectory_json(const Trajectory& traj, const std::string& path);
void export_trajectory_csv(const Trajectory& traj, const std::string& path);
Trajectory import_trajectory(const std::string& path);  // dispatches on extension

}  // namespace srs
