#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace equitest {

// Outcome vector plus covariate matrix.  The intercept column is NOT stored;
// the fitter prepends it.
struct Dataset {
  Eigen::VectorXd y;                      // length N
  Eigen::MatrixXd x;                      // N x K
  std::vector<std::string> column_names;  // empty or length K

  int n() const { return static_cast<int>(y.size()); }
  int k() const { return static_cast<int>(x.cols()); }
};

// Checks the Dataset invariants: N >= K + 2, finite entries, matching sizes.
// Rank and constant-column checks happen inside the fitter where the
// factorization is available.
void validate(const Dataset& data);

}  // namespace equitest
