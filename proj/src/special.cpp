#include "equitest/special.hpp"

#include <cmath>

#include "equitest/errors.hpp"

namespace equitest::special {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2*pi))

// Stirling tail: lgamma(z) = (z - 1/2) log z - z + log(sqrt(2 pi)) + corr(z).
double stirling_corr(double z) {
  const double z2 = z * z;
  return 1.0 / (12.0 * z) - 1.0 / (360.0 * z * z2) + 1.0 / (1260.0 * z2 * z2 * z);
}

// corr(a + d) - corr(a), expanded so the leading terms cancel analytically.
double stirling_corr_diff(double a, double d) {
  const double ad = a + d;
  const double t1 = -d / (12.0 * a * ad);
  const double a3 = a * a * a, ad3 = ad * ad * ad;
  const double t2 = d * (3.0 * a * a + 3.0 * a * d + d * d) / (360.0 * a3 * ad3);
  const double a5 = a3 * a * a, ad5 = ad3 * ad * ad;
  const double num5 = d * (5.0 * a3 * a + 10.0 * a3 * d + 10.0 * a * a * d * d +
                           5.0 * a * d * d * d + d * d * d * d);
  const double t3 = -num5 / (1260.0 * a5 * ad5);
  return t1 + t2 + t3;
}

}  // namespace

double log_gamma_ratio(double a, double d) {
  if (!(a > 0.0) || !(a + d > 0.0)) {
    throw DomainError("log_gamma_ratio requires a > 0 and a + d > 0");
  }
  if (a < 30.0 || a + d < 30.0) {
    return std::lgamma(a + d) - std::lgamma(a);
  }
  // (a+d-1/2) log(a+d) - (a-1/2) log a rearranged to avoid cancellation.
  return (a - 0.5) * std::log1p(d / a) + d * std::log(a + d) - d + stirling_corr_diff(a, d);
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("log_beta requires positive arguments");
  }
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  return std::lgamma(lo) - log_gamma_ratio(hi, lo);
}

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("incomplete_beta requires positive shape parameters");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("incomplete_beta requires x in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  // Lentz-style continued fraction for the regularized incomplete beta.
  const auto fraction = [](double a_, double b_, double x_) {
    constexpr double kFpMin = 1e-300;
    constexpr double kEps = 1e-16;
    constexpr int kMaxIter = 4000;
    const double qab = a_ + b_;
    const double qap = a_ + 1.0;
    const double qam = a_ - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x_ / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
      const int m2 = 2 * m;
      double aa = m * (b_ - m) * x_ / ((qam + m2) * (a_ + m2));
      d = 1.0 + aa * d;
      if (std::fabs(d) < kFpMin) d = kFpMin;
      c = 1.0 + aa / c;
      if (std::fabs(c) < kFpMin) c = kFpMin;
      d = 1.0 / d;
      h *= d * c;
      aa = -(a_ + m) * (qab + m) * x_ / ((a_ + m2) * (qap + m2));
      d = 1.0 + aa * d;
      if (std::fabs(d) < kFpMin) d = kFpMin;
      c = 1.0 + aa / c;
      if (std::fabs(c) < kFpMin) c = kFpMin;
      d = 1.0 / d;
      const double del = d * c;
      h *= del;
      if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw NonConvergence("incomplete_beta continued fraction did not converge");
  };

  const double log_bt =
      a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_bt) * fraction(a, b, x) / a;
  }
  return 1.0 - std::exp(log_bt) * fraction(b, a, 1.0 - x) / b;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double normal_pdf(double x) { return std::exp(-0.5 * x * x - kLogSqrt2Pi); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("normal_quantile requires p in (0, 1)");
  }
  // AS 241 (Wichura, 1988), PPND16.
  const double q = p - 0.5;
  double r;
  if (std::fabs(q) <= 0.425) {
    r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
               1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
             1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
               5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
             4.2313330701600911252e1) * r + 1.0);
  }
  r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
              4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
              2.05319162663775882187e0) * r + 1.0);
  } else {
    r -= 5.0;
    value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
              5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
  }
  return q < 0.0 ? -value : value;
}

}  // namespace equitest::special
