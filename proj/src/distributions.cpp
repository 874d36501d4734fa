#include "equitest/distributions.hpp"

#include <cmath>

#include "equitest/errors.hpp"
#include "equitest/quadrature.hpp"
#include "equitest/special.hpp"

namespace equitest {

namespace {

using special::incomplete_beta;
using special::log_beta;
using special::normal_cdf;

constexpr int kMaxSeriesTerms = 100000;
constexpr double kSeriesTol = 1e-13;
// Beyond this the leading Poisson weight exp(-ncp^2/2) underflows and the
// series cannot be started; switch to quadrature of the mixture form.
constexpr double kSeriesNcpLimit = 37.0;

void check_t_params(double df, double ncp) {
  if (!(df > 0.0)) throw DomainError("t distribution requires df > 0");
  if (!std::isfinite(ncp)) throw DomainError("t distribution requires finite ncp");
}

// P(T <= x; df, delta) for x >= 0 via the incomplete-beta series
//   Phi(-delta) + 1/2 sum_j [ p_j I_w(j+1/2, df/2) + q_j I_w(j+1, df/2) ].
double noncentral_t_series(double x, double df, double delta) {
  const double w = x * x / (x * x + df);
  if (w <= 0.0) return normal_cdf(-delta);

  const double lambda = 0.5 * delta * delta;
  const double b = 0.5 * df;
  const double log_w = std::log(w);
  const double log_1mw = std::log1p(-w);

  double ip = incomplete_beta(0.5, b, w);
  double iq = incomplete_beta(1.0, b, w);
  // g(a, b) = w^a (1-w)^b / (a B(a, b)), the ladder decrement for I_w(a+1, b).
  double gp = std::exp(0.5 * log_w + b * log_1mw - std::log(0.5) - log_beta(0.5, b));
  double gq = std::exp(log_w + b * log_1mw - log_beta(1.0, b));

  double p = std::exp(-lambda);
  double q = delta * std::exp(-lambda) * std::sqrt(2.0 / M_PI);
  double cum_p = p;
  double sum = p * ip + q * iq;

  for (int j = 0; j < kMaxSeriesTerms; ++j) {
    // Tail bound: the I ladders are nonincreasing and |q tail| <= |delta| * p tail.
    const double tail = (1.0 - cum_p) * (ip + std::fabs(delta) * iq);
    if (j >= lambda && tail < kSeriesTol) {
      const double result = normal_cdf(-delta) + 0.5 * sum;
      return std::fmin(1.0, std::fmax(0.0, result));
    }
    const double ap = j + 0.5;
    ip -= gp;
    gp *= w * (ap + b) / (ap + 1.0);
    const double aq = j + 1.0;
    iq -= gq;
    gq *= w * (aq + b) / (aq + 1.0);
    p *= lambda / (j + 1.0);
    q *= lambda / (j + 1.5);
    cum_p += p;
    sum += p * std::fmax(ip, 0.0) + q * std::fmax(iq, 0.0);
    ip = std::fmax(ip, 0.0);
    iq = std::fmax(iq, 0.0);
  }
  throw NonConvergence("noncentral t series exceeded its iteration budget");
}

// Mixture representation: with W = sqrt(chi^2_df / df),
//   P(T <= x; delta) = E_W[ Phi(x W - delta) ].
double noncentral_t_quadrature(double x, double df, double delta) {
  const double log_norm = 0.5 * df * std::log(0.5 * df) - std::lgamma(0.5 * df) +
                          std::log(2.0);
  const auto integrand = [&](double w) {
    if (w <= 0.0) return 0.0;
    const double log_density = log_norm + (df - 1.0) * std::log(w) - 0.5 * df * w * w;
    return normal_cdf(x * w - delta) * std::exp(log_density);
  };
  const double mode = df > 1.0 ? std::sqrt((df - 1.0) / df) : 0.5;
  try {
    const auto lower = quadrature::integrate(integrand, 0.0, mode, 5e-13);
    const auto upper = quadrature::integrate_to_infinity(integrand, mode, 5e-13);
    return std::fmin(1.0, std::fmax(0.0, lower.value + upper.value));
  } catch (const NonConvergence&) {
    throw NonConvergence("noncentral t quadrature fallback did not converge");
  }
}

double noncentral_t_cdf(double x, double df, double delta) {
  if (x < 0.0) return 1.0 - noncentral_t_cdf(-x, df, -delta);
  if (std::fabs(delta) > kSeriesNcpLimit) return noncentral_t_quadrature(x, df, delta);
  return noncentral_t_series(x, df, delta);
}

}  // namespace

double t_cdf(double x, double df) {
  check_t_params(df, 0.0);
  if (!std::isfinite(x)) return x > 0.0 ? 1.0 : 0.0;
  if (x == 0.0) return 0.5;
  const double w = df / (df + x * x);
  const double half_tail = 0.5 * incomplete_beta(0.5 * df, 0.5, w);
  return x > 0.0 ? 1.0 - half_tail : half_tail;
}

double t_cdf(double x, const TParams& p) {
  check_t_params(p.df, p.ncp);
  if (!std::isfinite(x)) return x > 0.0 ? 1.0 : 0.0;
  return noncentral_t_cdf(x, p.df, p.ncp);
}

double f_cdf(double x, double df1, double df2) {
  if (!(df1 > 0.0) || !(df2 > 0.0)) throw DomainError("F distribution requires df > 0");
  if (!(x >= 0.0)) throw DomainError("F distribution requires x >= 0");
  if (x == 0.0) return 0.0;
  if (!std::isfinite(x)) return 1.0;
  return incomplete_beta(0.5 * df1, 0.5 * df2, df1 * x / (df1 * x + df2));
}

double f_cdf(double x, const FParams& p) {
  if (!(p.df1 > 0.0) || !(p.df2 > 0.0)) throw DomainError("F distribution requires df > 0");
  if (!(p.ncp >= 0.0) || !std::isfinite(p.ncp)) {
    throw DomainError("F distribution requires ncp >= 0");
  }
  if (!(x >= 0.0)) throw DomainError("F distribution requires x >= 0");
  if (p.ncp == 0.0) return f_cdf(x, p.df1, p.df2);
  if (x == 0.0) return 0.0;
  if (!std::isfinite(x)) return 1.0;

  const double w = p.df1 * x / (p.df1 * x + p.df2);
  const double half_lambda = 0.5 * p.ncp;
  const double b = 0.5 * p.df2;
  const double log_w = std::log(w);
  const double log_1mw = std::log1p(-w);

  // Start at the modal Poisson weight and recurse in both directions.
  const long j0 = static_cast<long>(half_lambda);
  const double a0 = 0.5 * p.df1 + static_cast<double>(j0);
  const double p0 =
      std::exp(-half_lambda + j0 * std::log(half_lambda) - std::lgamma(j0 + 1.0));
  const double i0 = incomplete_beta(a0, b, w);
  const double g0 = std::exp(a0 * log_w + b * log_1mw - std::log(a0) - log_beta(a0, b));

  double sum = p0 * i0;
  double cum_p = p0;

  // Upward sweep: I_w(a+1, b) = I_w(a, b) - g(a, b).
  {
    double pj = p0, ij = i0, gj = g0, a = a0;
    for (long j = j0 + 1; j - j0 < kMaxSeriesTerms; ++j) {
      pj *= half_lambda / static_cast<double>(j);
      ij = std::fmax(ij - gj, 0.0);
      gj *= w * (a + b) / (a + 1.0);
      a += 1.0;
      sum += pj * ij;
      cum_p += pj;
      if (j >= half_lambda && (1.0 - cum_p) * ij < kSeriesTol) break;
    }
    if ((1.0 - cum_p) * ij >= kSeriesTol) {
      throw NonConvergence("noncentral F series exceeded its iteration budget");
    }
  }

  // Downward sweep: I_w(a-1, b) = I_w(a, b) + g(a-1, b).  At most j0 terms,
  // so run it to the end rather than bounding the truncated mass.
  {
    double pj = p0, ij = i0, gj = g0;
    for (long j = j0 - 1; j >= 0; --j) {
      const double a_next = 0.5 * p.df1 + static_cast<double>(j) + 1.0;
      pj *= static_cast<double>(j + 1) / half_lambda;
      gj *= a_next / (w * (a_next + b - 1.0));
      ij = std::fmin(ij + gj, 1.0);
      sum += pj * ij;
      cum_p += pj;
    }
  }

  return std::fmin(1.0, std::fmax(0.0, sum));
}

}  // namespace equitest
