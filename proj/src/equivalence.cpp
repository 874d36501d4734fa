#include "equitest/equivalence.hpp"

#include <cmath>
#include <sstream>

#include "equitest/distributions.hpp"
#include "equitest/errors.hpp"

namespace equitest {

namespace {

// Upper-tail probabilities via the exact reflection, so extreme statistics
// keep full absolute accuracy.
double t_sf(double x, double df) { return t_cdf(-x, df); }
double t_sf(double x, double df, double ncp) { return t_cdf(-x, TParams{df, -ncp}); }

void check_coef_index(const RegressionFit& fit, int k, int lowest) {
  if (k < lowest || k > fit.k) {
    std::ostringstream msg;
    msg << "coefficient index " << k << " out of range [" << lowest << ", " << fit.k << "]";
    throw IndexOutOfRange(msg.str());
  }
}

void check_scale(const Margin& margin, MarginScale expected, const char* test) {
  if (margin.scale != expected) {
    throw InvalidMargin(std::string(test) + ": margin is on the wrong scale");
  }
}

double dof(const RegressionFit& fit) { return static_cast<double>(fit.n - fit.k - 1); }

}  // namespace

Margin Margin::two_sided(double d1, double d2, MarginScale scale) {
  if (!(d1 < d2)) throw InvalidMargin("margin requires delta1 < delta2");
  if (!std::isfinite(d1) || !std::isfinite(d2)) throw InvalidMargin("margin must be finite");
  Margin m;
  m.delta1 = d1;
  m.delta2 = d2;
  m.one_sided = false;
  m.scale = scale;
  return m;
}

Margin Margin::symmetric(double delta, MarginScale scale) {
  if (!(delta > 0.0)) throw InvalidMargin("symmetric margin requires delta > 0");
  return two_sided(-delta, delta, scale);
}

Margin Margin::non_inferiority(double delta, MarginScale scale) {
  if (!std::isfinite(delta)) throw InvalidMargin("margin must be finite");
  if (scale == MarginScale::variance_explained && !(delta > 0.0 && delta < 1.0)) {
    throw InvalidMargin("variance-explained margin requires 0 < delta < 1");
  }
  if (!(delta > 0.0)) throw InvalidMargin("non-inferiority margin requires delta > 0");
  Margin m;
  m.delta1 = delta;
  m.delta2 = delta;
  m.one_sided = true;
  m.scale = scale;
  return m;
}

double Margin::bound() const {
  if (!one_sided) throw InvalidMargin("two-sided margin has no single bound");
  return delta2;
}

std::string to_string(TestKind kind) {
  switch (kind) {
    case TestKind::nhst_t: return "nhst-t";
    case TestKind::nhst_f: return "nhst-f";
    case TestKind::tost_beta: return "tost-beta";
    case TestKind::equiv_std_beta: return "equiv-std-beta";
    case TestKind::noninf_diffp2: return "noninf-diffp2";
    case TestKind::noninf_p2: return "noninf-p2";
  }
  return "unknown";
}

TestKind test_kind_from_string(const std::string& name) {
  if (name == "nhst-t") return TestKind::nhst_t;
  if (name == "nhst-f") return TestKind::nhst_f;
  if (name == "tost-beta") return TestKind::tost_beta;
  if (name == "equiv-std-beta") return TestKind::equiv_std_beta;
  if (name == "noninf-diffp2") return TestKind::noninf_diffp2;
  if (name == "noninf-p2") return TestKind::noninf_p2;
  throw PreconditionError("unknown test kind: " + name);
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::positive: return "positive";
    case Decision::negative: return "negative";
    case Decision::inconclusive: return "inconclusive";
  }
  return "unknown";
}

TestResult nhst_t(const RegressionFit& fit, int k) {
  check_coef_index(fit, k, 0);
  const double t = fit.beta_hat(k) / fit.se_beta_hat(k);
  TestResult out;
  out.kind = TestKind::nhst_t;
  out.k = k;
  out.p_value = std::fmin(1.0, 2.0 * t_sf(std::fabs(t), dof(fit)));
  return out;
}

TestResult nhst_f(const RegressionFit& fit, int k) {
  check_coef_index(fit, k, 1);
  const double nu = dof(fit);
  const double f_stat = nu * fit.diff_r2(k - 1) / (1.0 - fit.r2_yx);
  TestResult out;
  out.kind = TestKind::nhst_f;
  out.k = k;
  out.p_value = 1.0 - f_cdf(f_stat, 1.0, nu);
  return out;
}

TestResult tost_beta(const RegressionFit& fit, int k, const Margin& margin) {
  check_coef_index(fit, k, 0);
  check_scale(margin, MarginScale::raw_coefficient, "tost_beta");
  if (margin.one_sided) throw InvalidMargin("tost_beta requires a two-sided margin");
  const double nu = dof(fit);
  const double se = fit.se_beta_hat(k);
  const double beta = fit.beta_hat(k);
  TestResult out;
  out.kind = TestKind::tost_beta;
  out.k = k;
  out.margin = margin;
  out.p_lower = t_sf((beta - margin.delta1) / se, nu);
  out.p_upper = t_sf((margin.delta2 - beta) / se, nu);
  out.ncp_lower = 0.0;
  out.ncp_upper = 0.0;
  out.p_value = std::fmax(*out.p_lower, *out.p_upper);
  return out;
}

TestResult equiv_std_beta(const RegressionFit& fit, int k, const Margin& margin) {
  check_coef_index(fit, k, 1);
  check_scale(margin, MarginScale::standardized, "equiv_std_beta");
  if (margin.one_sided) throw InvalidMargin("equiv_std_beta requires a two-sided margin");

  const double nu = dof(fit);
  const double n = static_cast<double>(fit.n);
  const double r2_x = fit.r2_k_minus_k(k - 1);
  const double r2_y_rest = fit.r2_y_minus_k(k - 1);

  const auto ncp_for = [&](double delta) {
    const double denom = 1.0 - ((1.0 - r2_x) * delta * delta + r2_y_rest);
    if (!(denom > 0.0)) {
      const double max_delta = std::sqrt((1.0 - r2_y_rest) / (1.0 - r2_x));
      std::ostringstream msg;
      msg << "equiv_std_beta: margin " << delta
          << " is infeasible for this fit; |delta| must be below " << max_delta;
      throw InfeasibleMargin(msg.str());
    }
    return delta * std::sqrt(n * (1.0 - r2_x)) / std::sqrt(denom);
  };

  const double ncp1 = ncp_for(margin.delta1);
  const double ncp2 = -ncp_for(margin.delta2);
  const double t = fit.b_std_hat(k - 1) / fit.se_b_std_hat(k - 1);

  TestResult out;
  out.kind = TestKind::equiv_std_beta;
  out.k = k;
  out.margin = margin;
  out.ncp_lower = ncp1;
  out.ncp_upper = ncp2;
  out.p_lower = t_sf(t, nu, ncp1);
  out.p_upper = t_sf(-t, nu, ncp2);
  out.p_value = std::fmax(*out.p_lower, *out.p_upper);
  return out;
}

TestResult noninf_diff_p2(const RegressionFit& fit, int k, const Margin& margin) {
  check_coef_index(fit, k, 1);
  check_scale(margin, MarginScale::variance_explained, "noninf_diff_p2");
  if (!margin.one_sided) throw InvalidMargin("noninf_diff_p2 requires a one-sided margin");
  const double delta = margin.bound();
  const double nu = dof(fit);
  const double n = static_cast<double>(fit.n);

  const double t_stat =
      std::sqrt(nu * fit.diff_r2(k - 1)) / std::sqrt(1.0 - fit.r2_yx);
  const double ncp = std::sqrt(n * delta) / std::sqrt(1.0 - delta + fit.r2_k_minus_k(k - 1));

  TestResult out;
  out.kind = TestKind::noninf_diffp2;
  out.k = k;
  out.margin = margin;
  out.ncp_lower = ncp;
  out.p_value = t_cdf(t_stat, TParams{nu, ncp});
  return out;
}

TestResult noninf_p2(const RegressionFit& fit, const Margin& margin) {
  check_scale(margin, MarginScale::variance_explained, "noninf_p2");
  if (!margin.one_sided) throw InvalidMargin("noninf_p2 requires a one-sided margin");
  const double delta = margin.bound();
  const double nu = dof(fit);
  const double n = static_cast<double>(fit.n);
  const double kk = static_cast<double>(fit.k);

  const double f_stat = (fit.r2_yx / kk) / ((1.0 - fit.r2_yx) / nu);
  const double lambda = n * delta / (1.0 - delta);

  TestResult out;
  out.kind = TestKind::noninf_p2;
  out.k = 0;
  out.margin = margin;
  out.ncp_lower = lambda;
  out.p_value = f_cdf(f_stat, FParams{kk, nu, lambda});
  return out;
}

CetOutcome cet(const RegressionFit& fit, int k, const Margin& margin, double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw PreconditionError("cet requires 0 < alpha < 0.5");
  }
  CetOutcome out;
  out.alpha = alpha;
  out.p1 = nhst_t(fit, k).p_value;
  if (out.p1 < alpha) {
    out.decision = Decision::positive;
    return out;
  }
  out.p2 = equiv_std_beta(fit, k, margin).p_value;
  out.decision = *out.p2 < alpha ? Decision::negative : Decision::inconclusive;
  return out;
}

}  // namespace equitest
