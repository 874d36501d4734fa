#pragma once

namespace equitest::special {

// lgamma(a + d) - lgamma(a), computed without cancellation for large a.
// Requires a > 0 and a + d > 0.
double log_gamma_ratio(double a, double d);

// log of the complete beta function B(a, b), a, b > 0.
double log_beta(double a, double b);

// Regularized incomplete beta function I_x(a, b) for a, b > 0, x in [0, 1].
// Continued-fraction evaluation with the usual symmetry reduction.
// Throws NonConvergence if the fraction fails to settle.
double incomplete_beta(double a, double b, double x);

// Standard normal distribution.
double normal_cdf(double x);
double normal_pdf(double x);

// Inverse of normal_cdf on (0, 1).  Wichura's AS 241 rational approximation,
// accurate to full double precision.
double normal_quantile(double p);

}  // namespace equitest::special
