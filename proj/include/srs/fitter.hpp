#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srs/gait.hpp"
#include "srs/types.hpp"

namespace srs {

struct FitResult {
  JointVector q;
  double residual_mean = 0.0;   // m
  double residual_max = 0.0;    // m
  double extension_penalty = 0.0;  // sum of l^2, m^2
  bool converged = false;
  int restarts_used = 0;
  bool interpolated = false;  // set by fit_cycle when a failed sample is repaired
};

struct FitOptions {
  double lambda = 1.0;          // extension-penalty weight
  int max_restarts = 10;
  int max_iterations = 2000;    // per start
  double residual_accept = 0.009;  // m, on residual_mean (2% of nominal length)
  std::uint64_t seed = 1;
  bool parallel = false;        // cold-start samples concurrently in fit_cycle
};

/// Eq-style shape-matching cost: sum over paired points of the distance
/// between the backbone (base fixed at identity) and the target shape, plus
/// lambda * sum of squared length changes.
double cost(const JointVector& q, const CurveShape& shape,
            const RobotConfig& cfg, double lambda = 1.0);

/// Bounded minimization of cost over q in [0, l_max]^9. Tries warm_start
/// first if given, then seeded uniform-random restarts; returns the best.
/// Never throws on non-convergence.
FitResult fit_shape(const CurveShape& shape, const RobotConfig& cfg,
                    const FitOptions& opts,
                    const std::optional<JointVector>& warm_start = std::nullopt);

/// Fits every sample of one gait cycle. Sequential mode warm-starts each
/// sample from the previous solution; parallel mode cold-starts all samples
/// concurrently with per-sample seeds. Failed samples are repaired by linear
/// interpolation of neighboring converged solutions (circular). Throws if
/// fewer than half the samples converge.
std::vector<FitResult> fit_cycle(const GaitSpec& spec, const RobotConfig& cfg,
                                 const FitOptions& opts);

/// CSV fit diagnostics: sample,residual_mean_m,residual_max_m,restarts,converged.
void export_fit_diagnostics(const std::vector<FitResult>& fits,
                            const std::string& path);

}  // namespace srs
