#pragma once

#include <vector>

#include "srs/types.hpp"

namespace srs {

/// Absolute actuator lengths L_j = s_c (1 - r kappa cos(psi_j - phi)),
/// psi_j = 2pi (j-1)/3. Throws if kappa * r >= 1.
Vector3d lengths_from_arc(const ArcParams& arc, const ModuleConfig& cfg);

/// Closed-form inverse of lengths_from_arc given length changes q_i (m).
/// Equal lengths map to kappa = 0, phi = 0.
ArcParams arc_from_lengths(const Vector3d& q_i, const ModuleConfig& cfg);

/// Pose at fraction xi in [0,1] along a constant-curvature arc.
/// Uses the straight-line limit for |kappa s_c xi| < 1e-6.
Pose pose_on_arc(const ArcParams& arc, double xi);

/// Pose at fraction xi along module i's neutral axis. The trailing mounting
/// product (Rz(sigma), +Z offset delta) is applied only at xi = 1.
Pose module_transform(const Vector3d& q_i, const ModuleConfig& cfg, double xi);

/// Pose at global coordinate xi_global in [0,3] along the floating-base chain.
Pose chain_transform(const BasePose& q_b, const JointVector& q,
                     const RobotConfig& cfg, double xi_global);

/// n backbone positions at xi_global = 3k/(n-1), k = 0..n-1. n >= 2.
std::vector<Vector3d> sample_backbone(const BasePose& q_b, const JointVector& q,
                                      const RobotConfig& cfg, int n = 31);

/// Largest module curvature reachable within actuator bounds (one actuator
/// fully extended).
double max_reachable_curvature(const ModuleConfig& cfg);

}  // namespace srs
