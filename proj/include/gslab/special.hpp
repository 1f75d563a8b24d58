#pragma once

namespace gslab::num {

// Standard normal density and distribution function.
double norm_pdf(double x);
double norm_cdf(double x);

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x),
// a > 0, x >= 0. Series expansion for x < a+1, Lentz continued fraction
// otherwise; both iterate to ~1e-15 relative accuracy.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// P(|Z| <= r) for a standard Gaussian vector Z in R^dim: the chi distribution
// function, gamma_p(dim/2, r^2/2).
double chi_cdf(int dim, double r);

// Surface area of the unit sphere S^n in R^{n+1}.
double unit_sphere_area(int n);

}  // namespace gslab::num
