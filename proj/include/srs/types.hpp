#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace srs {

using Eigen::Matrix3d;
using Eigen::Vector3d;
using Vector9d = Eigen::Matrix<double, 9, 1>;

/// Rigid transform: rotation + translation, maps local coordinates to world.
struct Pose {
  Matrix3d rotation = Matrix3d::Identity();
  Vector3d translation = Vector3d::Zero();

  Pose() = default;
  Pose(const Matrix3d& R, const Vector3d& p) : rotation(R), translation(p) {}

  Pose operator*(const Pose& rhs) const {
    return {rotation * rhs.rotation, translation + rotation * rhs.translation};
  }

  Vector3d apply(const Vector3d& p) const { return translation + rotation * p; }

  Pose inverse() const {
    Matrix3d Rt = rotation.transpose();
    return {Rt, -(Rt * translation)};
  }

  bool is_valid(double tol = 1e-12) const {
    Matrix3d err = rotation.transpose() * rotation - Matrix3d::Identity();
    return err.cwiseAbs().maxCoeff() <= tol &&
           std::abs(rotation.determinant() - 1.0) <= tol;
  }
};

/// Geometry of a single 3-actuator extending module.
struct ModuleConfig {
  double L0 = 0.15;       // unactuated length, m
  double r = 0.0125;      // actuator offset radius, m
  double sigma = M_PI / 3;  // mounting rotation about +Z, rad
  double delta = 0.0;     // mounting axial offset, m
  double l_max = 0.065;   // max extension, m

  void validate() const {
    if (!(L0 > 0)) throw std::invalid_argument("ModuleConfig: L0 must be > 0");
    if (!(r > 0)) throw std::invalid_argument("ModuleConfig: r must be > 0");
    if (sigma < 0 || sigma >= 2 * M_PI)
      throw std::invalid_argument("ModuleConfig: sigma must be in [0, 2pi)");
    if (delta < 0) throw std::invalid_argument("ModuleConfig: delta must be >= 0");
    if (!(l_max > 0)) throw std::invalid_argument("ModuleConfig: l_max must be > 0");
  }
};

/// Whole-robot geometry and pressure mapping constants.
struct RobotConfig {
  std::array<ModuleConfig, 3> modules{};
  double body_radius = 0.0125;  // skin radius for rolling contact, m
  double pressure_gain = 100.0;  // bar per meter of extension
  double pressure_max = 4.0;     // bar
  double deadzone = 1.0;         // bar

  void validate() const {
    for (const auto& m : modules) m.validate();
    if (!(body_radius > 0))
      throw std::invalid_argument("RobotConfig: body_radius must be > 0");
    if (!(deadzone >= 0) || !(pressure_max > deadzone))
      throw std::invalid_argument("RobotConfig: need pressure_max > deadzone >= 0");
  }

  double total_length() const {
    double s = 0;
    for (const auto& m : modules) s += m.L0 + m.delta;
    return s;
  }
};

/// 9-vector of actuator length changes, module-major (l11,l12,l13,l21,...).
struct JointVector {
  Vector9d l = Vector9d::Zero();

  Vector3d module(int i) const { return l.segment<3>(3 * i); }

  bool within_bounds(const RobotConfig& cfg, double tol = 0.0) const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double v = l[3 * i + j];
        if (v < -tol || v > cfg.modules[i].l_max + tol) return false;
      }
    return true;
  }
};

/// Floating-base pose: translation + XYZ Euler angles.
struct BasePose {
  Vector3d xyz = Vector3d::Zero();
  Vector3d euler = Vector3d::Zero();  // alpha, beta, gamma in [-pi, pi]

  Pose to_pose() const {
    Matrix3d R = (Eigen::AngleAxisd(euler[0], Vector3d::UnitX()) *
                  Eigen::AngleAxisd(euler[1], Vector3d::UnitY()) *
                  Eigen::AngleAxisd(euler[2], Vector3d::UnitZ()))
                     .toRotationMatrix();
    return {R, xyz};
  }
};

/// Constant-curvature state of one module.
struct ArcParams {
  double kappa = 0.0;  // curvature, 1/m
  double phi = 0.0;    // bending-plane angle, rad, in (-pi, pi]
  double s_c = 0.15;   // center arclength, m

  void validate() const {
    if (kappa < 0) throw std::invalid_argument("ArcParams: kappa must be >= 0");
    if (!(s_c > 0)) throw std::invalid_argument("ArcParams: s_c must be > 0");
    if (phi <= -M_PI || phi > M_PI)
      throw std::invalid_argument("ArcParams: phi must be in (-pi, pi]");
  }
};

}  // namespace srs
