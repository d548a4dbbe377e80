#include "srs/trajectory.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace srs {

using nlohmann::json;

Vector9d pressure_map(const JointVector& q, const RobotConfig& cfg,
                      PressureFlags* flags) {
  Vector9d p;
  for (int i = 0; i < 9; ++i) {
    const double raw = cfg.pressure_gain * q.l[i];
    if (flags && raw > cfg.pressure_max) flags->clamped = true;
    p[i] = std::clamp(raw, 0.0, cfg.pressure_max);
    if (flags && p[i] > 0.0 && p[i] < cfg.deadzone) flags->deadzone = true;
  }
  return p;
}

Trajectory build_trajectory(const std::vector<FitResult>& fits,
                            const GaitSpec& spec, const RobotConfig& cfg,
                            int cycles) {
  if (fits.empty()) throw std::invalid_argument("build_trajectory: no fits");
  if (cycles < 1) throw std::invalid_argument("build_trajectory: cycles must be >= 1");
  const int n = static_cast<int>(fits.size());

  std::vector<Vector9d> cycle_q;
  cycle_q.reserve(n);
  for (const auto& f : fits) cycle_q.push_back(f.q.l);
  if (spec.kind == GaitKind::roll_outward)
    std::reverse(cycle_q.begin(), cycle_q.end());

  Trajectory traj;
  traj.gait = spec.kind;
  traj.period = spec.period;
  traj.cycles = cycles;
  traj.amplitude_scale = spec.amplitude_scale;
  const double step = spec.period / n;
  traj.samples.reserve(static_cast<size_t>(cycles) * n);
  for (int c = 0; c < cycles; ++c)
    for (int k = 0; k < n; ++k) {
      TrajectorySample s;
      s.t = (static_cast<double>(c) * n + k) * step;
      s.q = cycle_q[k];
      JointVector jv;
      jv.l = s.q;
      s.p = pressure_map(jv, cfg);
      traj.samples.push_back(s);
    }
  return traj;
}

Trajectory smooth(const Trajectory& traj, int window, const RobotConfig& cfg) {
  if (window < 1 || window % 2 == 0)
    throw std::invalid_argument("smooth: window must be odd and >= 1");
  const int total = static_cast<int>(traj.samples.size());
  const int n = total / traj.cycles;
  if (window > n)
    throw std::invalid_argument("smooth: window larger than cycle length");
  if (window == 1) return traj;

  Trajectory out = traj;
  const int half = window / 2;
  for (int c = 0; c < traj.cycles; ++c) {
    const int base = c * n;
    for (int k = 0; k < n; ++k) {
      Vector9d acc = Vector9d::Zero();
      for (int w = -half; w <= half; ++w)
        acc += traj.samples[base + (k + w + n) % n].q;
      out.samples[base + k].q = acc / window;
      JointVector jv;
      jv.l = out.samples[base + k].q;
      out.samples[base + k].p = pressure_map(jv, cfg);
    }
  }
  return out;
}

namespace {

json vec9_to_json(const Vector9d& v) {
  json a = json::array();
  for (int i = 0; i < 9; ++i) a.push_back(v[i]);
  return a;
}

Vector9d vec9_from_json(const json& a, const std::string& field) {
  if (!a.is_array() || a.size() != 9)
    throw std::runtime_error("trajectory: field \"" + field +
                             "\" must be an array of 9");
  Vector9d v;
  for (int i = 0; i < 9; ++i) v[i] = a[i].get<double>();
  return v;
}

void check_increasing(const Trajectory& traj) {
  for (size_t k = 1; k < traj.samples.size(); ++k)
    if (!(traj.samples[k].t > traj.samples[k - 1].t))
      throw std::runtime_error(
          "trajectory: timestamps must be strictly increasing (sample " +
          std::to_string(k) + ")");
}

const char* kCsvHeader =
    "t_s,l11_m,l12_m,l13_m,l21_m,l22_m,l23_m,l31_m,l32_m,l33_m,"
    "p11_bar,p12_bar,p13_bar,p21_bar,p22_bar,p23_bar,p31_bar,p32_bar,p33_bar";

}  // namespace

void export_trajectory_json(const Trajectory& traj, const std::string& path) {
  json samples = json::array();
  for (const auto& s : traj.samples)
    samples.push_back(
        {{"t", s.t}, {"q_m", vec9_to_json(s.q)}, {"p_bar", vec9_to_json(s.p)}});
  json j{{"gait", to_string(traj.gait)},
         {"period_s", traj.period},
         {"cycles", traj.cycles},
         {"amplitude_scale", traj.amplitude_scale},
         {"config_digest", traj.config_digest},
         {"samples", samples}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("export_trajectory_json: cannot open " + path);
  out << j.dump(2) << '\n';
}

void export_trajectory_csv(const Trajectory& traj, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("export_trajectory_csv: cannot open " + path);
  out << kCsvHeader << '\n';
  out.precision(9);
  for (const auto& s : traj.samples) {
    out << s.t;
    for (int i = 0; i < 9; ++i) out << ',' << s.q[i];
    for (int i = 0; i < 9; ++i) out << ',' << s.p[i];
    out << '\n';
  }
}

namespace {

Trajectory import_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("import_trajectory: cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("import_trajectory: " + path + ": " + e.what());
  }
  Trajectory traj;
  traj.gait = gait_kind_from_string(j.at("gait").get<std::string>());
  traj.period = j.at("period_s").get<double>();
  traj.cycles = j.at("cycles").get<int>();
  traj.amplitude_scale = j.at("amplitude_scale").get<double>();
  traj.config_digest = j.value("config_digest", "");
  for (const auto& s : j.at("samples")) {
    TrajectorySample ts;
    ts.t = s.at("t").get<double>();
    ts.q = vec9_from_json(s.at("q_m"), "q_m");
    ts.p = vec9_from_json(s.at("p_bar"), "p_bar");
    traj.samples.push_back(ts);
  }
  check_increasing(traj);
  return traj;
}

Trajectory import_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("import_trajectory: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::runtime_error("import_trajectory: " + path +
                             ": line 1: bad header");
  Trajectory traj;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<double> vals;
    while (std::getline(ss, field, ',')) {
      try {
        size_t used = 0;
        vals.push_back(std::stod(field, &used));
        if (used != field.size()) throw std::invalid_argument(field);
      } catch (const std::exception&) {
        throw std::runtime_error("import_trajectory: " + path + ": line " +
                                 std::to_string(lineno) + ": bad value \"" +
                                 field + "\"");
      }
    }
    if (vals.size() != 19)
      throw std::runtime_error("import_trajectory: " + path + ": line " +
                               std::to_string(lineno) + ": expected 19 fields");
    TrajectorySample s;
    s.t = vals[0];
    for (int i = 0; i < 9; ++i) s.q[i] = vals[1 + i];
    for (int i = 0; i < 9; ++i) s.p[i] = vals[10 + i];
    traj.samples.push_back(s);
  }
  check_increasing(traj);
  return traj;
}

}  // namespace

Trajectory import_trajectory(const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
    return import_csv(path);
  return import_json(path);
}

}  // namespace srs
