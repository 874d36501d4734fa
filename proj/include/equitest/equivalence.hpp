#pragma once

#include <optional>
#include <string>

#include "equitest/linear_model.hpp"

namespace equitest {

enum class MarginScale { raw_coefficient, standardized, variance_explained };

// Equivalence interval [delta1, delta2], or a single non-inferiority bound.
struct Margin {
  double delta1 = 0.0;
  double delta2 = 0.0;
  bool one_sided = false;
  MarginScale scale = MarginScale::raw_coefficient;

  static Margin two_sided(double d1, double d2, MarginScale scale);
  static Margin symmetric(double delta, MarginScale scale);  // [-delta, delta]
  static Margin non_inferiority(double delta, MarginScale scale);

  double bound() const;  // the one-sided delta
};

enum class TestKind { nhst_t, nhst_f, tost_beta, equiv_std_beta, noninf_diffp2, noninf_p2 };

std::string to_string(TestKind kind);
TestKind test_kind_from_string(const std::string& name);

struct TestResult {
  double p_value = 1.0;
  std::optional<double> p_lower;  // component against delta1, where applicable
  std::optional<double> p_upper;  // component against delta2
  TestKind kind = TestKind::nhst_t;
  int k = 0;
  std::optional<Margin> margin;
  std::optional<double> ncp_lower;  // noncentrality values actually used
  std::optional<double> ncp_upper;
};

enum class Decision { positive, negative, inconclusive };

std::string to_string(Decision d);

struct CetOutcome {
  Decision decision = Decision::inconclusive;
  double p1 = 1.0;                // NHST p-value
  std::optional<double> p2;       // equivalence p-value, absent when positive
  double alpha = 0.05;
};

// Two-sided t-test of H0: beta_k = 0.  k in 0..K (0 is the intercept).
TestResult nhst_t(const RegressionFit& fit, int k);

// The mathematically identical F-test.  k in 1..K.
TestResult nhst_f(const RegressionFit& fit, int k);

// TOST for the unstandardized coefficient against a raw-scale margin.
// k in 0..K.
TestResult tost_beta(const RegressionFit& fit, int k, const Margin& margin);

// Noncentral-t equivalence test for the standardized coefficient B_k.
// k in 1..K.  Throws InfeasibleMargin when the noncentrality denominator
// 1 - ((1 - R2_{X_k X_-k}) delta^2 + R2_{Y X_-k}) is not positive; the
// message reports the largest feasible |delta|.
TestResult equiv_std_beta(const RegressionFit& fit, int k, const Margin& margin);

// Non-inferiority test of H0: diffP2_k >= delta (variance-explained scale).
TestResult noninf_diff_p2(const RegressionFit& fit, int k, const Margin& margin);

// Non-inferiority test of H0: P2_YX >= delta for the whole model.
TestResult noninf_p2(const RegressionFit& fit, const Margin& margin);

// Conditional equivalence testing: NHST first; on failure to reject, the
// standardized equivalence test.  Requires 0 < alpha < 0.5.
CetOutcome cet(const RegressionFit& fit, int k, const Margin& margin, double alpha);

}  // namespace equitest
