#include "gslab/quadrules.hpp"

#include <cmath>

#include "gslab/errors.hpp"
#include "gslab/tridiag.hpp"

namespace gslab::num {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix, weights are
// mass * (first eigenvector component)^2.
Rule1D golub_welsch(std::vector<double> off, double mass) {
  const int n = static_cast<int>(off.size()) + 1;
  EigenResult eig = eigen_tridiagonal(std::vector<double>(n, 0.0), std::move(off), true);
  Rule1D rule;
  rule.x = eig.values;
  rule.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double v0 = eig.vectors[i][0];
    rule.w[i] = mass * v0 * v0;
  }
  // the Jacobi matrix is symmetric under x -> -x; enforce that pairing
  // exactly so product grids close under the antipodal map
  for (int i = 0; i < n / 2; ++i) {
    int j = n - 1 - i;
    double xm = 0.5 * (rule.x[j] - rule.x[i]);
    rule.x[i] = -xm;
    rule.x[j] = xm;
    double wm = 0.5 * (rule.w[i] + rule.w[j]);
    rule.w[i] = rule.w[j] = wm;
  }
  if (n % 2 == 1) rule.x[n / 2] = 0.0;
  return rule;
}

}  // namespace

Rule1D gauss_legendre(int n) {
  if (n < 1) fail_pre("RuleTooSmall", "gauss_legendre needs at least 1 node");
  std::vector<double> off(n - 1);
  for (int k = 1; k < n; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(std::move(off), 2.0);
}

Rule1D gauss_hermite(int n) {
  if (n < 1) fail_pre("RuleTooSmall", "gauss_hermite needs at least 1 node");
  std::vector<double> off(n - 1);
  for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(static_cast<double>(k));
  return golub_welsch(std::move(off), 1.0);
}

}  // namespace gslab::num
