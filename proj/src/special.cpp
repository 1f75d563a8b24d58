#include "gslab/special.hpp"

#include <cmath>

#include "gslab/errors.hpp"

namespace gslab::num {

namespace {
constexpr int kMaxIter = 500;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;

// Lower series: P(a,x) = x^a e^-x / Gamma(a+1) * sum_k x^k / ((a+1)...(a+k)).
double gamma_p_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int i = 0; i < kMaxIter; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps)
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  fail_tol("GammaSeriesStalled", "incomplete gamma series did not converge");
}

// Upper continued fraction (modified Lentz):
// Q(a,x) = x^a e^-x / Gamma(a) * 1/(x+1-a - 1(1-a)/(x+3-a - ...)).
double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps)
      return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  fail_tol("GammaFractionStalled", "incomplete gamma continued fraction did not converge");
}
}  // namespace

double norm_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

double norm_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double gamma_p(double a, double x) {
  if (a <= 0.0 || x < 0.0)
    fail_pre("GammaDomain", "gamma_p requires a > 0 and x >= 0");
  if (x == 0.0) return 0.0;
  return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0)
    fail_pre("GammaDomain", "gamma_q requires a > 0 and x >= 0");
  if (x == 0.0) return 1.0;
  return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi_cdf(int dim, double r) {
  if (dim < 1) fail_pre("GammaDomain", "chi_cdf requires dim >= 1");
  if (r <= 0.0) return 0.0;
  return gamma_p(0.5 * dim, 0.5 * r * r);
}

double unit_sphere_area(int n) {
  // |S^n| = 2 pi^{(n+1)/2} / Gamma((n+1)/2)
  double half = 0.5 * (n + 1);
  return 2.0 * std::pow(M_PI, half) / std::tgamma(half);
}

}  // namespace gslab::num
