#include <doctest.h>

#include <random>

#include "srs/gait.hpp"
#include "srs/quadrature.hpp"

using namespace srs;

namespace {

// Independent quadrature oracle: composite Simpson at fixed high resolution.
double composite_simpson(const std::function<double(double)>& f, double a,
                         double b, int intervals) {
  if (a == b) return 0.0;
  const double h = (b - a) / intervals;
  double acc = f(a) + f(b);
  for (int i = 1; i < intervals; ++i)
    acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

Eigen::Vector2d serpentine_oracle(double s, const GaitSpec& spec, double phase) {
  const double a_eff = spec.a * spec.amplitude_scale;
  auto head = [&](double u) { return a_eff * std::cos(spec.b * u + phase) + spec.c * u; };
  const int n = 20000;  // ~100x the adaptive grid
  return {composite_simpson([&](double u) { return std::cos(head(u)); }, 0, s, n),
          composite_simpson([&](double u) { return std::sin(head(u)); }, 0, s, n)};
}

}  // namespace

TEST_CASE("serpentine_point at s = 0") {
  GaitSpec spec = GaitSpec::serpentine_default();
  Eigen::Vector2d p = serpentine_point(0.0, spec);
  CHECK(p.norm() == 0.0);
}

TEST_CASE("serpentine slope at the origin") {
  GaitSpec spec = GaitSpec::serpentine_default();
  spec.c = 0.0;
  const double h = 1e-7;
  Eigen::Vector2d p = serpentine_point(h, spec);
  CHECK(p.x() / h == doctest::Approx(std::cos(-M_PI / 4)).epsilon(1e-5));
  CHECK(p.y() / h == doctest::Approx(std::sin(-M_PI / 4)).epsilon(1e-5));
}

TEST_CASE("serpentine_point matches independent quadrature oracle") {
  GaitSpec spec = GaitSpec::serpentine_default();
  for (int k = 1; k <= 20; ++k) {
    const double s = 0.45 * k / 20.0;
    Eigen::Vector2d got = serpentine_point(s, spec);
    Eigen::Vector2d want = serpentine_oracle(s, spec, 0.0);
    CHECK((got - want).norm() < 1e-9);
  }
}

TEST_CASE("frame_at: straight-line degenerate curve") {
  GaitSpec spec = GaitSpec::serpentine_default();
  spec.a = 0.0;
  Pose f = frame_at(0.0, spec);
  // tangent is world +X; local +Z must map onto it
  CHECK((f.rotation * Vector3d::UnitZ() - Vector3d::UnitX()).norm() < 1e-12);
}

TEST_CASE("frame_at: tangent from the slope example") {
  GaitSpec spec = GaitSpec::serpentine_default();
  Pose f = frame_at(0.0, spec);
  Vector3d t = f.rotation * Vector3d::UnitZ();
  CHECK(t.x() == doctest::Approx(0.70711).epsilon(1e-4));
  CHECK(t.y() == doctest::Approx(-0.70711).epsilon(1e-4));
  CHECK(t.z() == doctest::Approx(0.0));
}

TEST_CASE("frame_at returns valid poses for random arclengths") {
  GaitSpec spec = GaitSpec::serpentine_default();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    Pose f = frame_at(u(rng), spec);
    CHECK(f.is_valid(1e-12));
  }
}

TEST_CASE("rolling shape is periodic in t_frac") {
  RobotConfig cfg;
  GaitSpec spec = GaitSpec::rolling_default(GaitKind::roll_inward);
  CurveShape a = gait_shape_at(0.0, spec, cfg);
  CurveShape b = gait_shape_at(1.0 - 1e-12, spec, cfg);
  for (size_t k = 0; k < a.points.size(); ++k)
    CHECK((a.points[k] - b.points[k]).norm() < 1e-8);
}

TEST_CASE("rolling shape at half cycle is the arc rotated by pi") {
  RobotConfig cfg;
  GaitSpec spec = GaitSpec::rolling_default(GaitKind::roll_inward);
  CurveShape a = gait_shape_at(0.0, spec, cfg);
  CurveShape b = gait_shape_at(0.5, spec, cfg);
  Matrix3d Rz = Eigen::AngleAxisd(M_PI, Vector3d::UnitZ()).toRotationMatrix();
  for (size_t k = 0; k < a.points.size(); ++k)
    CHECK((Rz * a.points[k] - b.points[k]).norm() < 1e-9);
}

TEST_CASE("rolling shapes are isometric across the cycle") {
  RobotConfig cfg;
  GaitSpec spec = GaitSpec::rolling_default(GaitKind::roll_outward);
  CurveShape a = gait_shape_at(0.2, spec, cfg);
  CurveShape b = gait_shape_at(0.7, spec, cfg);
  for (size_t i = 0; i < a.points.size(); i += 5)
    for (size_t j = 0; j < a.points.size(); j += 3) {
      const double da = (a.points[i] - a.points[j]).norm();
      const double db = (b.points[i] - b.points[j]).norm();
      CHECK(da == doctest::Approx(db).epsilon(1e-9));
    }
}

TEST_CASE("serpentine window shifts sub-wavelength between instants") {
  RobotConfig cfg;
  GaitSpec spec = GaitSpec::serpentine_default();
  const int n = spec.samples_per_cycle;
  CurveShape a = gait_shape_at(0.0, spec, cfg);
  CurveShape b = gait_shape_at(1.0 / n, spec, cfg);
  double max_disp = 0.0;
  for (size_t k = 0; k < a.points.size(); ++k)
    max_disp = std::max(max_disp, (a.points[k] - b.points[k]).norm());
  CHECK(max_disp < 2.0 * spec.fit_length / n);
}

TEST_CASE("serpentine shapes are planar through the origin") {
  RobotConfig cfg;
  GaitSpec spec = GaitSpec::serpentine_default();
  CurveShape shape = gait_shape_at(0.37, spec, cfg);
  CHECK(shape.points.front().norm() < 1e-12);
  for (const auto& p : shape.points) CHECK(std::abs(p.y()) < 1e-9);
}

TEST_CASE("chord length consistency") {
  RobotConfig cfg;
  for (GaitKind kind :
       {GaitKind::serpentine, GaitKind::roll_inward, GaitKind::roll_outward}) {
    GaitSpec spec = kind == GaitKind::serpentine
                        ? GaitSpec::serpentine_default()
                        : GaitSpec::rolling_default(kind);
    CurveShape shape = gait_shape_at(0.25, spec, cfg);
    double chord = 0.0;
    for (size_t k = 1; k < shape.points.size(); ++k)
      chord += (shape.points[k] - shape.points[k - 1]).norm();
    CHECK(chord == doctest::Approx(spec.fit_length).epsilon(0.005));
  }
}

TEST_CASE("gait_shape_at rejects unreachable curvature") {
  RobotConfig cfg;
  GaitSpec spec = GaitSpec::rolling_default(GaitKind::roll_inward);
  spec.r_R = 0.01;  // curvature 100 >> reachable
  CHECK_THROWS(gait_shape_at(0.0, spec, cfg));
}

TEST_CASE("gait spec JSON round trip of defaults") {
  GaitSpec spec = gait_spec_from_json(
      R"({"kind":"roll_inward","period_s":2.0,"amplitude_scale":0.8})");
  CHECK(spec.kind == GaitKind::roll_inward);
  CHECK(spec.period == doctest::Approx(2.0));
  CHECK(spec.amplitude_scale == doctest::Approx(0.8));
  CHECK(spec.r_R == doctest::Approx(0.5 / M_PI));
  CHECK_THROWS(gait_spec_from_json(R"({"kind":"serpentine","wibble":1})"));
}
