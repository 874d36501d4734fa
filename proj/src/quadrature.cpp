#include "equitest/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "equitest/errors.hpp"

namespace equitest::quadrature {

namespace {

// Gauss-Kronrod 7/15 abscissae on [0, 1] and weights.  Odd-indexed nodes are
// the embedded 7-point Gauss rule.
constexpr int kNodes = 8;
constexpr double kAbscissa[kNodes] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWeightKronrod[kNodes] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWeightGauss[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Segment {
  double a, b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment evaluate_segment(const std::function<double(double)>& f, double a, double b,
                         std::int64_t* evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWeightKronrod[7];
  double gauss = fc * kWeightGauss[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kAbscissa[i];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += fsum * kWeightKronrod[i];
    if (i % 2 == 1) gauss += fsum * kWeightGauss[i / 2];
  }
  *evaluations += 15;
  kronrod *= half;
  gauss *= half;
  // QUADPACK-style error heuristic: sharpen the raw |K15 - G7| difference.
  const double diff = std::fabs(kronrod - gauss);
  double err = diff;
  if (diff > 0.0) err = std::min(diff, 200.0 * diff * std::sqrt(200.0 * diff));
  return Segment{a, b, kronrod, err};
}

Result adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                int max_intervals) {
  if (!(abs_tol > 0.0)) throw DomainError("integration tolerance must be positive");
  if (a == b) return Result{0.0, 0.0, 0, 0};

  std::int64_t evals = 0;
  std::priority_queue<Segment> queue;
  queue.push(evaluate_segment(f, a, b, &evals));
  int intervals = 1;
  double total_err = queue.top().error;
  double total_val = queue.top().value;

  while (total_err > abs_tol) {
    if (intervals >= max_intervals) {
      throw NonConvergence("adaptive quadrature exceeded its interval budget");
    }
    Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval is at floating-point resolution; keep its estimate as-is.
      Segment pinned = worst;
      pinned.error = 0.0;
      queue.push(pinned);
      continue;
    }
    Segment left = evaluate_segment(f, worst.a, mid, &evals);
    Segment right = evaluate_segment(f, mid, worst.b, &evals);
    total_val += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++intervals;
  }

  // Recompute the sums in a deterministic order for a stable result.
  std::vector<Segment> segments;
  segments.reserve(static_cast<std::size_t>(intervals));
  while (!queue.empty()) {
    segments.push_back(queue.top());
    queue.pop();
  }
  std::sort(segments.begin(), segments.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  double value = 0.0, error = 0.0;
  for (const Segment& s : segments) {
    value += s.value;
    error += s.error;
  }
  if (!std::isfinite(value)) {
    throw NonConvergence("adaptive quadrature produced a non-finite value");
  }
  return Result{value, error, intervals, evals};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 int max_intervals) {
  return adaptive(f, a, b, abs_tol, max_intervals);
}

Result integrate_to_infinity(const std::function<double(double)>& f, double a, double abs_tol,
                             int max_intervals) {
  const auto mapped = [&f, a](double u) {
    const double x = a + (1.0 - u) / u;
    const double fx = f(x);
    return fx / (u * u);
  };
  return adaptive(mapped, 0.0, 1.0, abs_tol, max_intervals);
}

}  // namespace equitest::quadrature
