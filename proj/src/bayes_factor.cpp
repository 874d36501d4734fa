#include "equitest/bayes_factor.hpp"

#include <cmath>
#include <string>

#include "equitest/errors.hpp"
#include "equitest/linear_model.hpp"
#include "equitest/quadrature.hpp"

namespace equitest {

namespace {

constexpr double kLgammaHalf = 0.57236494292470009;  // lgamma(1/2) = log(sqrt(pi))

struct LogIntegrand {
  double n, p, r2, half_b;  // half_b = n * rscale^2 / 2

  // log f(u) where u = log g, including the Jacobian g du.
  double operator()(double u) const {
    const double g = std::exp(u);
    const double log_model = 0.5 * (n - 1.0 - p) * std::log1p(g) -
                             0.5 * (n - 1.0) * std::log1p(g * (1.0 - r2));
    const double log_prior =
        0.5 * std::log(half_b) - kLgammaHalf - 1.5 * u - half_b / g;
    return log_model + log_prior + u;
  }
};

}  // namespace

double log_jzs_ratio_vs_null(int n, int p, double r2, double rscale, double* rel_error) {
  if (p == 0) {
    if (rel_error) *rel_error = 0.0;
    return 0.0;
  }
  if (p < 0 || n <= p + 1) throw PreconditionError("JZS ratio requires n > p + 1 >= 1");
  if (!(r2 >= 0.0 && r2 < 1.0)) throw PreconditionError("JZS ratio requires 0 <= r2 < 1");
  if (!(rscale > 0.0)) throw PreconditionError("JZS ratio requires rscale > 0");

  const LogIntegrand logf{static_cast<double>(n), static_cast<double>(p), r2,
                          0.5 * n * rscale * rscale};

  // Locate the mode on a coarse grid of u = log g, then clip to where the
  // integrand is within exp(-60) of its peak.
  double u_max = 0.0, f_max = -std::numeric_limits<double>::infinity();
  constexpr double kLo = -46.0, kHi = 46.0, kStep = 0.25;
  for (double u = kLo; u <= kHi; u += kStep) {
    const double v = logf(u);
    if (v > f_max) {
      f_max = v;
      u_max = u;
    }
  }
  double lo = u_max, hi = u_max;
  while (lo > kLo && logf(lo) > f_max - 60.0) lo -= kStep;
  while (hi < kHi && logf(hi) > f_max - 60.0) hi += kStep;

  const auto shifted = [&](double u) { return std::exp(logf(u) - f_max); };
  quadrature::Result quad;
  try {
    quad = quadrature::integrate(shifted, lo, hi, 1e-10);
  } catch (const NonConvergence& e) {
    throw QuadratureFailure(std::string("JZS quadrature failed: ") + e.what());
  }
  if (!(quad.value > 0.0)) throw QuadratureFailure("JZS quadrature produced a non-positive mass");
  if (rel_error) *rel_error = quad.error / quad.value;
  return f_max + std::log(quad.value);
}

BfResult jzs_bf_inclusion(const RegressionFit& fit, int k, double rscale) {
  if (k < 1 || k > fit.k) {
    throw IndexOutOfRange("jzs_bf_inclusion: covariate index " + std::to_string(k) +
                          " out of range [1, " + std::to_string(fit.k) + "]");
  }
  if (!(rscale > 0.0)) throw PreconditionError("jzs_bf_inclusion requires rscale > 0");

  double rel1 = 0.0, rel0 = 0.0;
  const double log_q1 = log_jzs_ratio_vs_null(fit.n, fit.k, fit.r2_yx, rscale, &rel1);
  const double log_q0 =
      log_jzs_ratio_vs_null(fit.n, fit.k - 1, fit.r2_y_minus_k(k - 1), rscale, &rel0);

  BfResult out;
  out.rscale = rscale;
  out.log_bf10 = log_q1 - log_q0;
  out.bf10 = std::exp(out.log_bf10);
  out.quadrature_error = out.bf10 * (rel1 + rel0);
  return out;
}

BfResult jzs_bf_inclusion(const Dataset& data, int k, double rscale) {
  return jzs_bf_inclusion(fit_ols(data), k, rscale);
}

Decision bf_decision(double bf10, double threshold) {
  if (!(threshold > 1.0)) throw InvalidThreshold("bf_decision requires threshold > 1");
  if (!(bf10 > 0.0)) throw PreconditionError("bf_decision requires bf10 > 0");
  if (bf10 >= threshold) return Decision::positive;
  if (bf10 <= 1.0 / threshold) return Decision::negative;
  return Decision::inconclusive;
}

}  // namespace equitest
