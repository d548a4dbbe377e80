#include "srs/fitter.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <random>

#include "srs/kinematics.hpp"

namespace srs {

namespace {

Vector9d clamp_to_box(Vector9d x, const RobotConfig& cfg) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double& v = x[3 * i + j];
      v = std::clamp(v, 0.0, cfg.modules[i].l_max);
    }
  return x;
}

struct Objective {
  const CurveShape& shape;
  const RobotConfig& cfg;
  double lambda;

  double operator()(const Vector9d& x) const {
    JointVector q;
    q.l = x;
    return cost(q, shape, cfg, lambda);
  }
};

/// Nelder-Mead with box projection and adaptive coefficients for n = 9.
/// Runs until the iteration budget is spent, re-inflating the simplex around
/// the incumbent whenever it collapses.
Vector9d nelder_mead(const Objective& f, Vector9d x0, const RobotConfig& cfg,
                     int max_iterations) {
  constexpr int n = 9;
  const double alpha = 1.0;
  const double gamma = 1.0 + 2.0 / n;
  const double rho = 0.75 - 0.5 / n;
  const double sig = 1.0 - 1.0 / n;

  std::array<Vector9d, n + 1> pts;
  std::array<double, n + 1> vals;
  std::array<int, n + 1> order;

  auto init_simplex = [&](const Vector9d& center, double step) {
    pts[0] = clamp_to_box(center, cfg);
    vals[0] = f(pts[0]);
    for (int i = 0; i < n; ++i) {
      Vector9d p = center;
      const double hi = cfg.modules[i / 3].l_max;
      p[i] += (p[i] + step * hi <= hi) ? step * hi : -step * hi;
      pts[i + 1] = clamp_to_box(p, cfg);
      vals[i + 1] = f(pts[i + 1]);
    }
  };

  int evals = 0;
  double step = 0.15;
  init_simplex(x0, step);

  while (evals < max_iterations) {
    for (int i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vals[a] < vals[b]; });
    const int best = order[0], worst = order[n], second_worst = order[n - 1];

    // simplex collapsed: re-inflate around the incumbent
    double spread = 0.0;
    for (int i = 1; i <= n; ++i)
      spread = std::max(spread, (pts[order[i]] - pts[best]).cwiseAbs().maxCoeff());
    if (spread < 1e-10 || vals[worst] - vals[best] < 1e-14) {
      step *= 0.25;
      if (step < 1e-7) break;
      Vector9d keep = pts[best];
      init_simplex(keep, step);
      evals += n + 1;
      continue;
    }

    Vector9d centroid = Vector9d::Zero();
    for (int i = 0; i < n; ++i) centroid += pts[order[i]];
    centroid /= n;

    Vector9d xr = clamp_to_box(centroid + alpha * (centroid - pts[worst]), cfg);
    double fr = f(xr);
    ++evals;

    if (fr < vals[best]) {
      Vector9d xe = clamp_to_box(centroid + gamma * (xr - centroid), cfg);
      double fe = f(xe);
      ++evals;
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
    } else if (fr < vals[second_worst]) {
      pts[worst] = xr;
      vals[worst] = fr;
    } else {
      const bool outside = fr < vals[worst];
      Vector9d xc = outside
                        ? clamp_to_box(centroid + rho * (xr - centroid), cfg)
                        : clamp_to_box(centroid - rho * (centroid - pts[worst]), cfg);
      double fc = f(xc);
      ++evals;
      if (fc < std::min(fr, vals[worst])) {
        pts[worst] = xc;
        vals[worst] = fc;
      } else {
        for (int i = 1; i <= n; ++i) {
          int idx = order[i];
          pts[idx] = clamp_to_box(pts[best] + sig * (pts[idx] - pts[best]), cfg);
          vals[idx] = f(pts[idx]);
        }
        evals += n;
      }
    }
  }

  int best = 0;
  for (int i = 1; i <= n; ++i)
    if (vals[i] < vals[best]) best = i;
  return pts[best];
}

void residual_stats(const Vector9d& x, const CurveShape& shape,
                    const RobotConfig& cfg, double& mean, double& max) {
  const int n = static_cast<int>(shape.points.size());
  JointVector q;
  q.l = x;
  BasePose base{};
  mean = 0.0;
  max = 0.0;
  for (int k = 0; k < n; ++k) {
    const double xi = 3.0 * k / (n - 1);
    const double d =
        (chain_transform(base, q, cfg, xi).translation - shape.points[k]).norm();
    mean += d;
    max = std::max(max, d);
  }
  mean /= n;
}

}  // namespace

double cost(const JointVector& q, const CurveShape& shape,
            const RobotConfig& cfg, double lambda) {
  if (shape.points.size() != shape.arclengths.size() || shape.points.size() < 2)
    throw std::invalid_argument("cost: shape point/arclength counts mismatch");
  const int n = static_cast<int>(shape.points.size());
  BasePose base{};
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    const double xi = 3.0 * k / (n - 1);
    total += (chain_transform(base, q, cfg, xi).translation - shape.points[k]).norm();
  }
  return total + lambda * q.l.squaredNorm();
}

FitResult fit_shape(const CurveShape& shape, const RobotConfig& cfg,
                    const FitOptions& opts,
                    const std::optional<JointVector>& warm_start) {
  Objective obj{shape, cfg, opts.lambda};
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  FitResult best;
  double best_cost = std::numeric_limits<double>::infinity();

  for (int start = 0; start < opts.max_restarts; ++start) {
    Vector9d x0;
    if (start == 0 && warm_start) {
      x0 = clamp_to_box(warm_start->l, cfg);
    } else {
      for (int i = 0; i < 9; ++i)
        x0[i] = unit(rng) * cfg.modules[i / 3].l_max;
    }
    Vector9d x = nelder_mead(obj, x0, cfg, opts.max_iterations);
    const double c = obj(x);
    if (c < best_cost) {
      best_cost = c;
      best.q.l = x;
      best.restarts_used = start + 1;
      residual_stats(x, shape, cfg, best.residual_mean, best.residual_max);
    }
    if (best.residual_mean <= opts.residual_accept) break;
  }
  best.extension_penalty = best.q.l.squaredNorm();
  best.converged = best.residual_mean <= opts.residual_accept;
  return best;
}

std::vector<FitResult> fit_cycle(const GaitSpec& spec, const RobotConfig& cfg,
                                 const FitOptions& opts) {
  spec.validate();
  const int n = spec.samples_per_cycle;
  std::vector<CurveShape> shapes;
  shapes.reserve(n);
  for (int k = 0; k < n; ++k)
    shapes.push_back(gait_shape_at(static_cast<double>(k) / n, spec, cfg));

  std::vector<FitResult> fits(n);
  if (opts.parallel) {
    std::vector<std::future<FitResult>> futs;
    futs.reserve(n);
    for (int k = 0; k < n; ++k) {
      FitOptions o = opts;
      o.seed = opts.seed + static_cast<std::uint64_t>(k);
      futs.push_back(std::async(std::launch::async, [&, o, k] {
        return fit_shape(shapes[k], cfg, o);
      }));
    }
    for (int k = 0; k < n; ++k) fits[k] = futs[k].get();
  } else {
    std::optional<JointVector> warm;
    for (int k = 0; k < n; ++k) {
      FitOptions o = opts;
      o.seed = opts.seed + static_cast<std::uint64_t>(k);
      fits[k] = fit_shape(shapes[k], cfg, o, warm);
      warm = fits[k].q;
    }
  }

  int n_conv = 0;
  for (const auto& f : fits) n_conv += f.converged ? 1 : 0;
  if (n_conv * 2 < n)
    throw std::runtime_error("fit_cycle: fewer than half the samples converged (" +
                             std::to_string(n_conv) + "/" + std::to_string(n) + ")");

  // repair failed samples from circular converged neighbors
  for (int k = 0; k < n; ++k) {
    if (fits[k].converged) continue;
    int prev = k, next = k;
    int dp = 0, dn = 0;
    do { prev = (prev + n - 1) % n; ++dp; } while (!fits[prev].converged);
    do { next = (next + 1) % n; ++dn; } while (!fits[next].converged);
    const double w = static_cast<double>(dp) / (dp + dn);
    fits[k].q.l = (1.0 - w) * fits[prev].q.l + w * fits[next].q.l;
    fits[k].interpolated = true;
    residual_stats(fits[k].q.l, shapes[k], cfg, fits[k].residual_mean,
                   fits[k].residual_max);
    fits[k].extension_penalty = fits[k].q.l.squaredNorm();
  }
  return fits;
}

void export_fit_diagnostics(const std::vector<FitResult>& fits,
                            const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("export_fit_diagnostics: cannot open " + path);
  out << "sample,residual_mean_m,residual_max_m,restarts,converged\n";
  out.precision(9);
  for (size_t k = 0; k < fits.size(); ++k)
    out << k << ',' << fits[k].residual_mean << ',' << fits[k].residual_max
        << ',' << fits[k].restarts_used << ',' << (fits[k].converged ? 1 : 0)
        << '\n';
}

}  // namespace srs
