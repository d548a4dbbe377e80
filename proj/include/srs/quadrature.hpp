#pragma once

#include <cmath>
#include <functional>

namespace srs {

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-10);

}  // namespace srs
