#include "srs/kinematics.hpp"

#include <cmath>

namespace srs {

namespace {

Matrix3d rot_z(double t) {
  return Eigen::AngleAxisd(t, Vector3d::UnitZ()).toRotationMatrix();
}

Matrix3d rot_y(double t) {
  return Eigen::AngleAxisd(t, Vector3d::UnitY()).toRotationMatrix();
}

constexpr double kStraightThreshold = 1e-6;  // rad, on theta = kappa s_c xi

}  // namespace

Vector3d lengths_from_arc(const ArcParams& arc, const ModuleConfig& cfg) {
  arc.validate();
  if (arc.kappa * cfg.r >= 1.0)
    throw std::invalid_argument(
        "lengths_from_arc: kappa * r >= 1 gives non-positive actuator length");
  Vector3d L;
  for (int j = 0; j < 3; ++j) {
    double psi = 2.0 * M_PI * j / 3.0;
    L[j] = arc.s_c * (1.0 - cfg.r * arc.kappa * std::cos(psi - arc.phi));
  }
  return L;
}

ArcParams arc_from_lengths(const Vector3d& q_i, const ModuleConfig& cfg) {
  Vector3d L = q_i.array() + cfg.L0;
  if ((L.array() <= 0).any())
    throw std::invalid_argument("arc_from_lengths: actuator length must be > 0");
  const double L1 = L[0], L2 = L[1], L3 = L[2];
  ArcParams arc;
  arc.s_c = L.sum() / 3.0;
  // difference form of L1^2+L2^2+L3^2-L1L2-L2L3-L3L1; avoids cancellation
  const double d12 = L1 - L2, d23 = L2 - L3, d31 = L3 - L1;
  double num = 0.5 * (d12 * d12 + d23 * d23 + d31 * d31);
  if (num <= 0) {  // equal lengths, straight by convention
    arc.kappa = 0.0;
    arc.phi = 0.0;
    return arc;
  }
  arc.kappa = 2.0 * std::sqrt(num) / (cfg.r * L.sum());
  arc.phi = std::atan2(std::sqrt(3.0) * (L3 - L2), L2 + L3 - 2.0 * L1);
  return arc;
}

Pose pose_on_arc(const ArcParams& arc, double xi) {
  const double theta = arc.kappa * arc.s_c * xi;
  if (std::abs(theta) < kStraightThreshold)
    return {Matrix3d::Identity(), Vector3d(0, 0, arc.s_c * xi)};
  const double c = std::cos(arc.phi), s = std::sin(arc.phi);
  Vector3d p((1.0 - std::cos(theta)) / arc.kappa * c,
             (1.0 - std::cos(theta)) / arc.kappa * s,
             std::sin(theta) / arc.kappa);
  Matrix3d R = rot_z(arc.phi) * rot_y(theta) * rot_z(-arc.phi);
  return {R, p};
}

Pose module_transform(const Vector3d& q_i, const ModuleConfig& cfg, double xi) {
  if (xi < 0.0 || xi > 1.0)
    throw std::invalid_argument("module_transform: xi must be in [0,1]");
  ArcParams arc = arc_from_lengths(q_i, cfg);
  Pose T = pose_on_arc(arc, xi);
  if (xi == 1.0) {
    Pose mount{rot_z(cfg.sigma), Vector3d(0, 0, cfg.delta)};
    T = T * mount;
  }
  return T;
}

Pose chain_transform(const BasePose& q_b, const JointVector& q,
                     const RobotConfig& cfg, double xi_global) {
  if (xi_global < 0.0 || xi_global > 3.0)
    throw std::invalid_argument("chain_transform: xi_global must be in [0,3]");
  const int active = std::min(static_cast<int>(std::floor(xi_global)), 2);
  Pose T = q_b.to_pose();
  for (int i = 0; i < active; ++i)
    T = T * module_transform(q.module(i), cfg.modules[i], 1.0);
  T = T * module_transform(q.module(active), cfg.modules[active],
                           xi_global - active);
  return T;
}

std::vector<Vector3d> sample_backbone(const BasePose& q_b, const JointVector& q,
                                      const RobotConfig& cfg, int n) {
  if (n < 2) throw std::invalid_argument("sample_backbone: n must be >= 2");
  std::vector<Vector3d> pts;
  pts.reserve(n);
  for (int k = 0; k < n; ++k)
    pts.push_back(chain_transform(q_b, q, cfg, 3.0 * k / (n - 1)).translation);
  return pts;
}

double max_reachable_curvature(const ModuleConfig& cfg) {
  // One actuator at l_max, the others unactuated.
  return 2.0 * cfg.l_max / (cfg.r * (3.0 * cfg.L0 + cfg.l_max));
}

}  // namespace srs
