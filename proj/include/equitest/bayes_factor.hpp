#pragma once

#include "equitest/dataset.hpp"
#include "equitest/equivalence.hpp"

namespace equitest {

// Default Cauchy prior scale on standardized effects ("medium").
inline constexpr double kRscaleMedium = 0.35355339059327373;  // sqrt(2)/4

struct BfResult {
  double bf10 = 1.0;
  double log_bf10 = 0.0;
  double rscale = kRscaleMedium;
  double quadrature_error = 0.0;  // estimated absolute error on bf10
};

// log of the JZS marginal-likelihood ratio of a p-covariate model with
// coefficient of determination r2 against the intercept-only model:
//
//   Q(p, r2) = integral over g of
//       (1+g)^{(n-1-p)/2} (1 + g (1-r2))^{-(n-1)/2} pi(g) dg,
//
// with g ~ InverseGamma(1/2, n rscale^2 / 2) (Zellner-Siow mixture).
// Q(0, .) = 1 exactly.  The integral runs over a log-transformed half-line
// with the integrand evaluated in log space.  rel_error, when non-null,
// receives the estimated relative quadrature error.
double log_jzs_ratio_vs_null(int n, int p, double r2, double rscale,
                             double* rel_error = nullptr);

// JZS Bayes factor for including covariate k (1..K): the full K-covariate
// model against the model with covariate k removed.  Both marginal
// likelihoods are taken against the shared intercept-only null, so the
// result is their ratio.
BfResult jzs_bf_inclusion(const Dataset& data, int k, double rscale = kRscaleMedium);

// Same comparison computed from an existing fit (avoids refitting in
// simulation loops).
BfResult jzs_bf_inclusion(const RegressionFit& fit, int k, double rscale = kRscaleMedium);

// Trichotomy for an evidence threshold > 1: bf10 >= threshold -> positive,
// bf10 <= 1/threshold -> negative, otherwise inconclusive.
Decision bf_decision(double bf10, double threshold);

}  // namespace equitest
