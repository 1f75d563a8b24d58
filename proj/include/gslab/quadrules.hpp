#pragma once
#include <vector>

namespace gslab::num {

struct Rule1D {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre rule on [-1,1] with unit weight (weights sum to 2),
// computed by the Golub-Welsch eigenvalue method. Nodes ascending and
// exactly antisymmetric about 0.
Rule1D gauss_legendre(int n);

// Probabilists' Gauss-Hermite rule: nodes t_i and weights w_i summing to 1,
// so sum w_i f(t_i) approximates the integral of f against the standard
// normal density on R. Nodes ascending and exactly antisymmetric.
Rule1D gauss_hermite(int n);

}  // namespace gslab::num
