#include "srs/gait.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "srs/kinematics.hpp"
#include "srs/quadrature.hpp"

namespace srs {

using nlohmann::json;

std::string to_string(GaitKind kind) {
  switch (kind) {
    case GaitKind::serpentine: return "serpentine";
    case GaitKind::roll_inward: return "roll_inward";
    case GaitKind::roll_outward: return "roll_outward";
  }
  return "?";
}

GaitKind gait_kind_from_string(const std::string& name) {
  if (name == "serpentine") return GaitKind::serpentine;
  if (name == "roll_inward") return GaitKind::roll_inward;
  if (name == "roll_outward") return GaitKind::roll_outward;
  throw std::invalid_argument("unknown gait kind \"" + name + "\"");
}

GaitSpec GaitSpec::serpentine_default() {
  GaitSpec s;
  s.kind = GaitKind::serpentine;
  // longer than the 0.45 m nominal length: bending an extend-only robot
  // lengthens it, and the fit window must span that extra arclength
  s.fit_length = 0.5;
  s.b = 2 * M_PI / s.fit_length;
  return s;
}

GaitSpec GaitSpec::rolling_default(GaitKind kind) {
  GaitSpec s;
  s.kind = kind;
  s.fit_length = 0.5;
  s.r_R = s.fit_length / M_PI;
  return s;
}

void GaitSpec::validate() const {
  if (!(period > 0)) throw std::invalid_argument("GaitSpec: period must be > 0");
  if (!(amplitude_scale > 0) || amplitude_scale > 1)
    throw std::invalid_argument("GaitSpec: amplitude_scale must be in (0,1]");
  if (samples_per_cycle < 8)
    throw std::invalid_argument("GaitSpec: samples_per_cycle must be >= 8");
  if (!(r_R > 0)) throw std::invalid_argument("GaitSpec: r_R must be > 0");
  if (!(fit_length > 0))
    throw std::invalid_argument("GaitSpec: fit_length must be > 0");
}

GaitSpec gait_spec_from_json(const std::string& text) {
  json j = json::parse(text);
  static const std::set<std::string> known{
      "kind", "period_s", "amplitude_scale", "a",
      "b",    "c",        "r_R",             "samples_per_cycle",
      "fit_length"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key()))
      throw std::invalid_argument("gait spec: unknown key \"" + it.key() + "\"");
  GaitKind kind = gait_kind_from_string(j.at("kind").get<std::string>());
  GaitSpec s = kind == GaitKind::serpentine ? GaitSpec::serpentine_default()
                                            : GaitSpec::rolling_default(kind);
  if (j.count("period_s")) s.period = j["period_s"].get<double>();
  if (j.count("amplitude_scale"))
    s.amplitude_scale = j["amplitude_scale"].get<double>();
  if (j.count("fit_length")) {
    s.fit_length = j["fit_length"].get<double>();
    // defaults derived from fit_length track it unless overridden below
    s.b = 2 * M_PI / s.fit_length;
    s.r_R = s.fit_length / M_PI;
  }
  if (j.count("a")) s.a = j["a"].get<double>();
  if (j.count("b")) s.b = j["b"].get<double>();
  if (j.count("c")) s.c = j["c"].get<double>();
  if (j.count("r_R")) s.r_R = j["r_R"].get<double>();
  if (j.count("samples_per_cycle"))
    s.samples_per_cycle = j["samples_per_cycle"].get<int>();
  s.validate();
  return s;
}

GaitSpec load_gait_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("gait spec: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return gait_spec_from_json(ss.str());
}

namespace {

double heading(double s, double a_eff, double b, double c, double phase) {
  return a_eff * std::cos(b * s + phase) + c * s;
}

}  // namespace

Eigen::Vector2d serpentine_point(double s, const GaitSpec& spec, double phase) {
  if (s < 0) throw std::invalid_argument("serpentine_point: s must be >= 0");
  const double a_eff = spec.a * spec.amplitude_scale;
  auto fx = [&](double u) { return std::cos(heading(u, a_eff, spec.b, spec.c, phase)); };
  auto fy = [&](double u) { return std::sin(heading(u, a_eff, spec.b, spec.c, phase)); };
  return {adaptive_simpson(fx, 0.0, s), adaptive_simpson(fy, 0.0, s)};
}

Pose frame_at(double s, const GaitSpec& spec, double phase) {
  const double a_eff = spec.a * spec.amplitude_scale;
  const double th = heading(s, a_eff, spec.b, spec.c, phase);
  const Vector3d tangent(std::cos(th), std::sin(th), 0.0);
  const Vector3d x_axis(-tangent.y(), tangent.x(), 0.0);
  const Vector3d y_axis = tangent.cross(x_axis);
  Matrix3d R;
  R.col(0) = x_axis;
  R.col(1) = y_axis;
  R.col(2) = tangent;
  Eigen::Vector2d p = serpentine_point(s, spec, phase);
  return {R, Vector3d(p.x(), p.y(), 0.0)};
}

CurveShape rolling_arc_shape(double kappa, double bend_plane, double length,
                             int n_points) {
  CurveShape shape;
  shape.points.reserve(n_points);
  shape.arclengths.reserve(n_points);
  const double cp = std::cos(bend_plane), sp = std::sin(bend_plane);
  for (int k = 0; k < n_points; ++k) {
    const double s = length * k / (n_points - 1);
    const double theta = kappa * s;
    Vector3d p;
    if (std::abs(theta) < 1e-6) {
      p = {0.0, 0.0, s};
    } else {
      const double lateral = (1.0 - std::cos(theta)) / kappa;
      p = {cp * lateral, sp * lateral, std::sin(theta) / kappa};
    }
    shape.points.push_back(p);
    shape.arclengths.push_back(s);
  }
  return shape;
}

CurveShape gait_shape_at(double t_frac, const GaitSpec& spec,
                         const RobotConfig& cfg, int n_points) {
  spec.validate();
  if (t_frac < 0.0 || t_frac >= 1.0)
    throw std::invalid_argument("gait_shape_at: t_frac must be in [0,1)");
  double kappa_reach = max_reachable_curvature(cfg.modules[0]);
  for (int i = 1; i < 3; ++i)
    kappa_reach = std::min(kappa_reach, max_reachable_curvature(cfg.modules[i]));

  CurveShape shape;
  if (spec.kind == GaitKind::serpentine) {
    const double a_eff = spec.a * spec.amplitude_scale;
    const double kappa_curve = std::abs(a_eff) * spec.b + std::abs(spec.c);
    if (kappa_curve > kappa_reach)
      throw std::invalid_argument("gait_shape_at: serpentine curvature " +
                                  std::to_string(kappa_curve) +
                                  " exceeds reachable " +
                                  std::to_string(kappa_reach));
    const double wavelength = 2 * M_PI / spec.b;
    const double s0 = t_frac * wavelength;
    const Pose window = frame_at(s0, spec).inverse();
    shape.points.reserve(n_points);
    shape.arclengths.reserve(n_points);
    for (int k = 0; k < n_points; ++k) {
      const double s = s0 + spec.fit_length * k / (n_points - 1);
      Eigen::Vector2d p = serpentine_point(s, spec);
      shape.points.push_back(window.apply(Vector3d(p.x(), p.y(), 0.0)));
      shape.arclengths.push_back(spec.fit_length * k / (n_points - 1));
    }
  } else {
    const double kappa = spec.amplitude_scale / spec.r_R;
    if (kappa > kappa_reach)
      throw std::invalid_argument("gait_shape_at: rolling curvature " +
                                  std::to_string(kappa) +
                                  " exceeds reachable " +
                                  std::to_string(kappa_reach));
    const double sign = spec.kind == GaitKind::roll_inward ? 1.0 : -1.0;
    shape = rolling_arc_shape(kappa, sign * 2 * M_PI * t_frac, spec.fit_length,
                              n_points);
  }
  shape.time_fraction = t_frac;
  return shape;
}

void export_shape_csv(const CurveShape& shape, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("export_shape_csv: cannot open " + path);
  out << "s_m,x_m,y_m,z_m\n";
  out.precision(9);
  for (size_t k = 0; k < shape.points.size(); ++k)
    out << shape.arclengths[k] << ',' << shape.points[k].x() << ','
        << shape.points[k].y() << ',' << shape.points[k].z() << '\n';
}

}  // namespace srs
