#pragma once
#include <cstdint>
#include <vector>

namespace gslab::num {

using Matrix = std::vector<std::vector<double>>;

struct EigenResult {
  std::vector<double> values;    // ascending
  std::vector<std::vector<double>> vectors;  // vectors[j] pairs with values[j]; empty if not requested
};

// Dense symmetric eigensolver: Householder reduction to tridiagonal form
// followed by QL iteration with implicit shifts. Throws ConvergenceFailure
// if any eigenvalue needs more than 50 QL sweeps.
EigenResult eigen_symmetric(Matrix a, bool want_vectors = true);

// Same QL core applied directly to a symmetric tridiagonal matrix
// (diag has n entries, off has n-1).
EigenResult eigen_tridiagonal(std::vector<double> diag, std::vector<double> off,
                              bool want_vectors = true);

// Thomas elimination for a[i] x[i-1] + b[i] x[i] + c[i] x[i+1] = r[i]
// with a[0] and c[n-1] ignored.
std::vector<double> tridiag_solve(const std::vector<double>& a,
                                  const std::vector<double>& b,
                                  const std::vector<double>& c,
                                  std::vector<double> r);

// Same system with cyclic coupling (a[0] ties row 0 to row n-1, c[n-1] ties
// row n-1 to row 0), solved by the Sherman-Morrison rank-one correction.
std::vector<double> cyclic_tridiag_solve(const std::vector<double>& a,
                                         const std::vector<double>& b,
                                         const std::vector<double>& c,
                                         const std::vector<double>& r);

// Eigenvector of the symmetric cyclic tridiagonal matrix (diag d, couplings
// e[i] between i and i+1 mod n) for an eigenvalue mu already known to high
// accuracy, via inverse iteration from a deterministic start vector.
std::vector<double> cyclic_eigenvector(const std::vector<double>& d,
                                       const std::vector<double>& e,
                                       double mu);

}  // namespace gslab::num
