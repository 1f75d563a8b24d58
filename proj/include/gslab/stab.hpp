#pragma once
#include <string>
#include <vector>

#include "gslab/surface.hpp"
#include "gslab/vec.hpp"

namespace gslab {

// Scalar samples over a grid, with optional structure hints that unlock the
// exact operator paths.
struct FieldSamples {
  Vec values;
  // Optional tangential gradient per node, in ambient coordinates.
  std::vector<Vec> grad;
  // >= 0: values restrict a spherical harmonic of this degree (sphere grids).
  int harmonic_degree = -1;
};

struct OperatorOptions {
  int harmonic_degree = -1;
};

// Drift Laplacian  calL f = Delta f - <x, grad f>  on supported grids:
// exact eigen-action on sphere samples with a harmonic-degree hint, finite
// differences along closed one-dimensional chains, Hermite expansion along
// the flat direction of two-dimensional strips. Anything else is rejected
// (UnsupportedSurface).
Vec apply_drift_laplacian(const QuadratureGrid& g, const Vec& f,
                          const OperatorOptions& opt = {});
// L f = calL f + (|A|^2 + 1) f.
Vec apply_L(const QuadratureGrid& g, const Vec& f,
            const OperatorOptions& opt = {});

// Closed-form spectrum of L on the sphere of radius r, dimension n:
// eigenvalue 1 + (n - l(l+n-1))/r^2 per harmonic degree l.
struct SphereMode {
  int degree;
  double eigenvalue;
  double multiplicity;
};
std::vector<SphereMode> sphere_spectrum(int n, double r, int max_degree);

// Spectrum of L restricted to a closed one-dimensional chain: the curve
// itself, or the meridian profile of a revolution surface acting on
// axisymmetric functions.
struct ProfileSpectrum {
  std::vector<double> values;  // descending
  Vec top_function;            // positive, max-normalized; empty if not asked
  int chain_size = 0;
};
ProfileSpectrum profile_spectrum(const Surface& s, int resolution, int count,
                                 bool want_function = true);
// Core eigensolver for a periodic chain: node weights, edge lengths
// (edge i joins node i and i+1 mod M), and zeroth-order potential.
ProfileSpectrum chain_spectrum(const std::vector<double>& node_weight,
                               const std::vector<double>& edge_length,
                               const std::vector<double>& potential, int count,
                               bool want_function);

// Cluster near-equal eigenvalues for reporting.
struct SpectrumLine {
  int index;
  double eigenvalue;
  int multiplicity;
};
std::vector<SpectrumLine> group_spectrum(const std::vector<double>& values,
                                         double tol);

// One verified identity of the operators on a lambda-surface.
struct IdentityReport {
  std::string identity;
  int grid = 0;
  double max_residual = 0.0;
  // Weighted L2 norm of the pointwise residual; for integral identities both
  // fields carry the absolute scalar defect.
  double l2_residual = 0.0;
};

const std::vector<std::string>& identity_names();
IdentityReport check_identity(const Surface& s, double lambda,
                              const std::string& id, int resolution);

// Largest Rayleigh quotient  int f L f gamma / int f^2 gamma  over the given
// trials, combined with the top chain eigenvalue when the grid carries a
// closed chain.
double rayleigh_delta(const QuadratureGrid& g,
                      const std::vector<FieldSamples>& trials);

}  // namespace gslab
