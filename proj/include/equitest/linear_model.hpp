#pragma once

#include <Eigen/Dense>
#include <utility>

#include "equitest/dataset.hpp"

namespace equitest {

// Least-squares estimates together with the R^2 family every test consumes.
// Index 0 of beta_hat / se_beta_hat is the intercept; the K-vectors are
// aligned with the covariate columns (entry k-1 belongs to covariate k).
struct RegressionFit {
  Eigen::VectorXd beta_hat;      // K+1
  Eigen::VectorXd se_beta_hat;   // K+1
  double sigma_hat = 0.0;        // residual scale, denominator N-K-1
  double r2_yx = 0.0;            // coefficient of determination
  Eigen::VectorXd r2_y_minus_k;  // K: R^2 of y on all covariates but k
  Eigen::VectorXd r2_k_minus_k;  // K: R^2 of covariate k on the others
  Eigen::VectorXd b_std_hat;     // K: standardized coefficients
  Eigen::VectorXd se_b_std_hat;  // K
  Eigen::VectorXd diff_r2;       // K: r2_yx - r2_y_minus_k
  int n = 0;
  int k = 0;
};

// Ordinary least squares via column-pivoted QR (relative rank tolerance
// 1e-10 on the factorization diagonal).  Populates all auxiliary R^2 values
// by refitting the K leave-one-covariate-out regressions and the K
// covariate-on-the-rest regressions.
//
// Throws NonFiniteInput, TooFewObservations, RankDeficient, or DegenerateFit
// (residual sum of squares underflows; R^2 = 1 is not representable here).
RegressionFit fit_ols(const Dataset& data);

// Standardized coefficients B_k = beta_k * s_k / s_y with N-1 denominators
// in both sample standard deviations, and their standard errors
// SE(B_k) = sqrt((1 - R2_yx) / ((1 - R2_{X_k X_-k}) (N - K - 1))).
std::pair<Eigen::VectorXd, Eigen::VectorXd> standardized_coefficients(const RegressionFit& fit,
                                                                      const Dataset& data);

}  // namespace equitest
