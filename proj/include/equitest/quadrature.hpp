#pragma once

#include <cstdint>
#include <functional>

namespace equitest::quadrature {

struct Result {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int intervals = 0;
  std::int64_t evaluations = 0;
};

// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
// Subdivides the interval with the largest local error until the summed
// error estimate drops below abs_tol.  Throws NonConvergence when the
// interval budget is exhausted first.
Result integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 int max_intervals = 4000);

// Integral of f over [a, +infinity), mapped to (0, 1] via x = a + (1-u)/u.
// The Kronrod nodes are interior, so f is never evaluated at the endpoint.
Result integrate_to_infinity(const std::function<double(double)>& f, double a, double abs_tol,
                             int max_intervals = 4000);

}  // namespace equitest::quadrature
