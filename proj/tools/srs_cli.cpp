#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "srs/config_io.hpp"
#include "srs/estimator.hpp"
#include "srs/fitter.hpp"
#include "srs/gait.hpp"
#include "srs/kinematics.hpp"
#include "srs/trajectory.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitComputation = 2;

srs::GaitKind parse_gait_flag(const std::string& name) {
  if (name == "serpentine") return srs::GaitKind::serpentine;
  if (name == "roll-in") return srs::GaitKind::roll_inward;
  if (name == "roll-out") return srs::GaitKind::roll_outward;
  throw std::invalid_argument("unknown gait \"" + name +
                              "\" (expected serpentine|roll-in|roll-out)");
}

int run_fit(const std::string& gait, const std::string& config_path,
            double period, double amplitude, int cycles, int samples,
            std::uint64_t seed, const std::string& out_path, int smooth_window,
            bool parallel) {
  srs::RobotConfig cfg;
  srs::GaitSpec spec;
  try {
    cfg = srs::load_robot_config(config_path);
    srs::GaitKind kind = parse_gait_flag(gait);
    spec = kind == srs::GaitKind::serpentine
               ? srs::GaitSpec::serpentine_default()
               : srs::GaitSpec::rolling_default(kind);
    spec.period = period;
    spec.amplitude_scale = amplitude;
    spec.samples_per_cycle = samples;
    spec.validate();
    if (smooth_window < 1 || smooth_window % 2 == 0)
      throw std::invalid_argument("--smooth must be odd and >= 1");
  } catch (const std::exception& e) {
    std::cerr << "fit: validation: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    srs::FitOptions opts;
    opts.seed = seed;
    opts.parallel = parallel;
    auto fits = srs::fit_cycle(spec, cfg, opts);
    int converged = 0;
    double mean_res = 0;
    for (const auto& f : fits) {
      converged += f.converged ? 1 : 0;
      mean_res += f.residual_mean;
    }
    mean_res /= fits.size();
    std::cout << "fit: " << converged << "/" << fits.size()
              << " samples converged, mean residual "
              << mean_res * 1000 << " mm\n";
    auto traj = srs::build_trajectory(fits, spec, cfg, cycles);
    traj.config_digest = srs::config_digest(cfg);
    if (smooth_window > 1) traj = srs::smooth(traj, smooth_window, cfg);
    if (out_path.size() >= 4 &&
        out_path.compare(out_path.size() - 4, 4, ".csv") == 0)
      srs::export_trajectory_csv(traj, out_path);
    else
      srs::export_trajectory_json(traj, out_path);
    std::cout << "fit: wrote " << out_path << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "fit: computation: " << e.what() << '\n';
    return kExitComputation;
  }
}

void write_svg(const std::vector<srs::Vector3d>& pts, const std::string& path) {
  // Two panes: XY projection on the left, XZ on the right.
  const double pane = 300.0, margin = 20.0;
  double extent = 1e-6;
  for (const auto& p : pts)
    extent = std::max({extent, std::abs(p.x()), std::abs(p.y()), std::abs(p.z())});
  const double scale = (pane / 2 - margin) / extent;

  auto polyline = [&](double ox, auto proj) {
    std::ostringstream s;
    s << "  <polyline fill=\"none\" stroke=\"black\" points=\"";
    for (const auto& p : pts) {
      auto [u, v] = proj(p);
      s << ox + pane / 2 + u * scale << ',' << pane / 2 - v * scale << ' ';
    }
    s << "\"/>\n";
    return s.str();
  };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * pane
      << "\" height=\"" << pane << "\">\n";
  out << polyline(0.0, [](const srs::Vector3d& p) {
    return std::pair{p.x(), p.y()};
  });
  out << polyline(pane, [](const srs::Vector3d& p) {
    return std::pair{p.x(), p.z()};
  });
  out << "</svg>\n";
}

int run_shape(const std::string& config_path, const std::string& joints_csv,
              const std::string& base_csv, int points,
              const std::string& out_path) {
  try {
    srs::RobotConfig cfg = srs::load_robot_config(config_path);
    srs::JointVector q;
    {
      std::stringstream ss(joints_csv);
      std::string field;
      int i = 0;
      while (std::getline(ss, field, ',')) {
        if (i >= 9) throw std::invalid_argument("--joints needs exactly 9 values");
        q.l[i++] = std::stod(field);
      }
      if (i != 9) throw std::invalid_argument("--joints needs exactly 9 values");
    }
    if (!q.within_bounds(cfg))
      throw std::invalid_argument(
          "--joints outside actuator bounds [0, l_max]");
    srs::BasePose base;
    if (!base_csv.empty()) {
      std::stringstream ss(base_csv);
      std::string field;
      std::array<double, 6> vals{};
      int i = 0;
      while (std::getline(ss, field, ',')) {
        if (i >= 6) throw std::invalid_argument("--base needs exactly 6 values");
        vals[i++] = std::stod(field);
      }
      if (i != 6) throw std::invalid_argument("--base needs exactly 6 values");
      base.xyz = {vals[0], vals[1], vals[2]};
      base.euler = {vals[3], vals[4], vals[5]};
    }
    auto pts = srs::sample_backbone(base, q, cfg, points);
    if (out_path.size() >= 4 &&
        out_path.compare(out_path.size() - 4, 4, ".svg") == 0) {
      write_svg(pts, out_path);
    } else {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot open " + out_path);
      out << "x_m,y_m,z_m\n";
      out.precision(9);
      for (const auto& p : pts)
        out << p.x() << ',' << p.y() << ',' << p.z() << '\n';
    }
    std::cout << "shape: wrote " << out_path << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "shape: validation: " << e.what() << '\n';
    return kExitValidation;
  }
}

int run_estimate(const std::string& config_path, const std::string& table_path,
                 const std::string& out_path) {
  srs::RobotConfig cfg;
  std::vector<srs::VelocityRecord> table;
  try {
    cfg = srs::load_robot_config(config_path);
    table = srs::load_velocity_table(table_path);
  } catch (const std::exception& e) {
    std::cerr << "estimate: validation: " << e.what() << '\n';
    return kExitValidation;
  }
  try {
    auto report = srs::compare_with_measured(cfg, table);
    srs::export_report_json(report, out_path);
    std::cout << srs::report_to_text(report);
    std::cout << "estimate: wrote " << out_path << '\n';
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "estimate: validation: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "estimate: computation: " << e.what() << '\n';
    return kExitComputation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soft robotic snake gait synthesis"};
  app.require_subcommand(1);

  // fit
  std::string gait, config_path, out_path;
  double period = 4.0, amplitude = 1.0;
  int cycles = 1, samples = 32, smooth_window = 1;
  std::uint64_t seed = 1;
  bool parallel = false;
  auto* fit = app.add_subcommand("fit", "Fit a gait cycle and export a trajectory");
  fit->add_option("--gait", gait, "serpentine|roll-in|roll-out")->required();
  fit->add_option("--config", config_path, "robot config JSON")->required();
  fit->add_option("--period", period, "gait period, s");
  fit->add_option("--amplitude", amplitude, "amplitude scale in (0,1]");
  fit->add_option("--cycles", cycles, "number of cycles to tile");
  fit->add_option("--samples", samples, "samples per cycle");
  fit->add_option("--seed", seed, "random seed");
  fit->add_option("--out", out_path, "output trajectory (.json or .csv)")->required();
  fit->add_option("--smooth", smooth_window, "odd moving-average window");
  fit->add_flag("--parallel", parallel, "cold-start samples concurrently");

  // shape
  std::string joints_csv, base_csv, shape_out;
  int points = 31;
  std::string shape_config;
  auto* shape = app.add_subcommand("shape", "Sample the backbone for given joints");
  shape->add_option("--config", shape_config, "robot config JSON")->required();
  shape->add_option("--joints", joints_csv, "9 comma-separated length changes, m")
      ->required();
  shape->add_option("--base", base_csv, "x,y,z,alpha,beta,gamma");
  shape->add_option("--points", points, "backbone point count");
  shape->add_option("--out", shape_out, "output path (.csv or .svg)")->required();

  // estimate
  std::string est_config, table_path, est_out;
  auto* estimate = app.add_subcommand("estimate", "Compare predictions with measured velocities");
  estimate->add_option("--config", est_config, "robot config JSON")->required();
  estimate->add_option("--table", table_path, "measured velocity CSV")->required();
  estimate->add_option("--out", est_out, "output report JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  if (fit->parsed())
    return run_fit(gait, config_path, period, amplitude, cycles, samples, seed,
                   out_path, smooth_window, parallel);
  if (shape->parsed())
    return run_shape(shape_config, joints_csv, base_csv, points, shape_out);
  return run_estimate(est_config, table_path, est_out);
}
