#include "srs/quadrature.hpp"

namespace srs {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm, double whole,
               double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double delta = left + right - whole;
  if (depth >= 50 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return recurse(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1) +
         recurse(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = simpson(f, a, fa, b, fb, m, fm);
  return recurse(f, a, fa, b, fb, m, fm, whole, tol, 0);
}

}  // namespace srs
