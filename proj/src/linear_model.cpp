#include "equitest/linear_model.hpp"

#include <cmath>
#include <string>

#include "equitest/errors.hpp"

namespace equitest {

namespace {

constexpr double kRankTol = 1e-10;
// Relative floor below which the residual sum of squares counts as zero.
constexpr double kDegenerateTol = 1e-12;

struct QrFit {
  Eigen::VectorXd beta;
  double rss = 0.0;
};

QrFit solve_augmented(const Eigen::MatrixXd& design, const Eigen::VectorXd& y,
                      const char* what) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(kRankTol);
  if (qr.rank() < design.cols()) {
    throw RankDeficient(std::string(what) +
                        ": design matrix is rank deficient (constant or collinear columns)");
  }
  QrFit out;
  out.beta = qr.solve(y);
  out.rss = (y - design * out.beta).squaredNorm();
  return out;
}

Eigen::MatrixXd with_intercept(const Eigen::MatrixXd& x) {
  Eigen::MatrixXd design(x.rows(), x.cols() + 1);
  design.col(0).setOnes();
  design.rightCols(x.cols()) = x;
  return design;
}

double centered_sum_of_squares(const Eigen::VectorXd& v) {
  return (v.array() - v.mean()).square().sum();
}

// R^2 of response on the given design columns (intercept prepended).
double r_squared(const Eigen::MatrixXd& covariates, const Eigen::VectorXd& response,
                 const char* what) {
  const double tss = centered_sum_of_squares(response);
  if (tss <= 0.0) {
    throw DegenerateFit(std::string(what) + ": response has zero variance");
  }
  if (covariates.cols() == 0) return 0.0;
  const QrFit fit = solve_augmented(with_intercept(covariates), response, what);
  const double r2 = 1.0 - fit.rss / tss;
  return std::fmin(std::fmax(r2, 0.0), 1.0);
}

Eigen::MatrixXd drop_column(const Eigen::MatrixXd& x, int col) {
  Eigen::MatrixXd out(x.rows(), x.cols() - 1);
  int j = 0;
  for (int c = 0; c < x.cols(); ++c) {
    if (c == col) continue;
    out.col(j++) = x.col(c);
  }
  return out;
}

}  // namespace

void validate(const Dataset& data) {
  const int n = data.n();
  const int k = data.k();
  if (k < 1) throw PreconditionError("dataset needs at least one covariate");
  if (data.x.rows() != n) throw PreconditionError("outcome and covariate row counts differ");
  if (!data.column_names.empty() && static_cast<int>(data.column_names.size()) != k) {
    throw PreconditionError("column_names length does not match covariate count");
  }
  if (n <= k + 1) {
    throw TooFewObservations("need N >= K + 2 observations, got N = " + std::to_string(n) +
                             " with K = " + std::to_string(k));
  }
  if (!data.y.allFinite() || !data.x.allFinite()) {
    throw NonFiniteInput("dataset contains non-finite entries");
  }
}

RegressionFit fit_ols(const Dataset& data) {
  validate(data);
  const int n = data.n();
  const int k = data.k();
  const double dof = static_cast<double>(n - k - 1);

  const Eigen::MatrixXd design = with_intercept(data.x);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(kRankTol);
  if (qr.rank() < design.cols()) {
    throw RankDeficient("fit_ols: covariates are collinear or constant (rank "
                        + std::to_string(qr.rank()) + " < " + std::to_string(design.cols()) + ")");
  }

  RegressionFit fit;
  fit.n = n;
  fit.k = k;
  fit.beta_hat = qr.solve(data.y);

  const double rss = (data.y - design * fit.beta_hat).squaredNorm();
  const double tss = centered_sum_of_squares(data.y);
  if (tss <= 0.0) throw DegenerateFit("fit_ols: outcome has zero variance");
  if (rss <= kDegenerateTol * tss) {
    throw DegenerateFit("fit_ols: residual sum of squares underflows (perfect fit, R^2 = 1)");
  }
  fit.sigma_hat = std::sqrt(rss / dof);
  fit.r2_yx = 1.0 - rss / tss;

  // (X^T X)^{-1} from the pivoted factorization, for the coefficient SEs.
  const int p = k + 1;
  const Eigen::MatrixXd r_upper =
      qr.matrixQR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd r_inv =
      r_upper.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
  const Eigen::MatrixXd xtx_inv =
      qr.colsPermutation() * (r_inv * r_inv.transpose()) *
      qr.colsPermutation().transpose();
  fit.se_beta_hat = (fit.sigma_hat * xtx_inv.diagonal().array().sqrt()).matrix();

  fit.r2_y_minus_k.resize(k);
  fit.r2_k_minus_k.resize(k);
  fit.diff_r2.resize(k);
  for (int j = 0; j < k; ++j) {
    const Eigen::MatrixXd others = drop_column(data.x, j);
    fit.r2_y_minus_k(j) = r_squared(others, data.y, "fit_ols (leave-one-out)");
    // For K = 1 the remaining design is intercept-only and R^2 is 0.
    fit.r2_k_minus_k(j) = k == 1 ? 0.0 : r_squared(others, data.x.col(j), "fit_ols (covariate)");
    double diff = fit.r2_yx - fit.r2_y_minus_k(j);
    if (diff < 0.0 && diff > -1e-10) diff = 0.0;  // roundoff only
    fit.diff_r2(j) = diff;
  }

  auto [b_std, se_b_std] = standardized_coefficients(fit, data);
  fit.b_std_hat = std::move(b_std);
  fit.se_b_std_hat = std::move(se_b_std);
  return fit;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> standardized_coefficients(const RegressionFit& fit,
                                                                      const Dataset& data) {
  const int n = fit.n;
  const int k = fit.k;
  const double dof = static_cast<double>(n - k - 1);
  // Sample standard deviations with the N-1 denominator.
  const double sd_y = std::sqrt(centered_sum_of_squares(data.y) / (n - 1));
  Eigen::VectorXd b_std(k), se_b_std(k);
  for (int j = 0; j < k; ++j) {
    const double sd_x = std::sqrt(centered_sum_of_squares(data.x.col(j)) / (n - 1));
    b_std(j) = fit.beta_hat(j + 1) * sd_x / sd_y;
    se_b_std(j) = std::sqrt((1.0 - fit.r2_yx) / ((1.0 - fit.r2_k_minus_k(j)) * dof));
  }
  return {std::move(b_std), std::move(se_b_std)};
}

}  // namespace equitest
