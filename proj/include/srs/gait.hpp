#pragma once

#include <string>
#include <vector>

#include "srs/types.hpp"

namespace srs {

enum class GaitKind { serpentine, roll_inward, roll_outward };

std::string to_string(GaitKind kind);
GaitKind gait_kind_from_string(const std::string& name);

/// Parameters of one gait family. Use the factory functions for the
/// defaults; both gaits carry a longer fit_length than the nominal robot
/// length so the target stays reachable with extension-only actuators.
struct GaitSpec {
  GaitKind kind = GaitKind::serpentine;
  double period = 4.0;           // s
  double amplitude_scale = 1.0;  // (0, 1]
  double a = -M_PI / 4;          // serpentine heading amplitude, rad
  double b = 2 * M_PI / 0.5;     // serpentine wavenumber, rad/m
  double c = 0.0;                // serpentine drift, rad/m
  double r_R = 0.5 / M_PI;       // rolling arc radius, m
  int samples_per_cycle = 32;
  double fit_length = 0.5;       // curve arclength spanned by the robot, m

  static GaitSpec serpentine_default();
  static GaitSpec rolling_default(GaitKind kind);

  void validate() const;
};

GaitSpec gait_spec_from_json(const std::string& text);
GaitSpec load_gait_spec(const std::string& path);

/// One taskspace shape the robot is fitted to, expressed in the body frame.
struct CurveShape {
  std::vector<Vector3d> points;
  std::vector<double> arclengths;
  double time_fraction = 0.0;
};

/// Serpentine curve point (x, y): integrals of cos/sin of the heading
/// a cos(b s + phase) + c s, evaluated by adaptive quadrature.
/// amplitude_scale multiplies a.
Eigen::Vector2d serpentine_point(double s, const GaitSpec& spec,
                                 double phase = 0.0);

/// Local frame at arclength s on the serpentine curve: +Z along the tangent,
/// +X the in-plane left normal, +Y = Z x X. Maps local to world.
Pose frame_at(double s, const GaitSpec& spec, double phase = 0.0);

/// Shape of the gait at time fraction t_frac in [0,1). Rejects target
/// curvature beyond the robot's reachable module curvature.
CurveShape gait_shape_at(double t_frac, const GaitSpec& spec,
                         const RobotConfig& cfg, int n_points = 31);

/// Planar constant-curvature arc in the body frame; no reachability check.
CurveShape rolling_arc_shape(double kappa, double bend_plane, double length,
                             int n_points = 31);

/// CSV export with columns s_m, x_m, y_m, z_m.
void export_shape_csv(const CurveShape& shape, const std::string& path);

}  // namespace srs
