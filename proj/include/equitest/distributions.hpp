#pragma once

namespace equitest {

struct TParams {
  double df = 1.0;   // degrees of freedom, > 0
  double ncp = 0.0;  // noncentrality, finite
};

struct FParams {
  double df1 = 1.0;  // numerator degrees of freedom, > 0
  double df2 = 1.0;  // denominator degrees of freedom, > 0
  double ncp = 0.0;  // noncentrality, >= 0
};

// P(T <= x) for Student's t with df degrees of freedom.
double t_cdf(double x, double df);

// P(T <= x) for the noncentral t distribution.  Series of incomplete-beta
// terms for |ncp| <= 37; direct quadrature of the scale-mixture
// representation beyond that, where the series weights underflow.
// Throws NonConvergence if the iteration budget is exhausted.
double t_cdf(double x, const TParams& p);

// P(F <= x) for the central F distribution.
double f_cdf(double x, double df1, double df2);

// P(F <= x) for the noncentral F distribution (Poisson mixture of central
// F terms, summed outward from the modal weight).
double f_cdf(double x, const FParams& p);

}  // namespace equitest
