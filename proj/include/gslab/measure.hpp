#pragma once
#include <vector>

#include "gslab/surface.hpp"

namespace gslab {

// All measures use the ambient Gaussian density
// gamma(x) = (2 pi)^{-d/2} exp(-|x|^2/2) on R^d, for the enclosed volume and
// the surface integral alike.

// ---- closed forms -----------------------------------------------------

// Gaussian measure of the ball of radius r in R^d.
double ball_volume(int d, double r);
// Gaussian surface integral over the sphere of radius r, dimension n.
double sphere_area(double r, int n);
// Gaussian measure of the solid round cylinder {|x_{1..k+1}| <= r} in any
// ambient dimension containing it.
double cylinder_volume(double r, int k);
// Gaussian surface integral over r S^k x R^{n-k}.
double cylinder_area(double r, int k);
// Gaussian measure of the slab {|x_1| <= t}.
double slab_volume(double t);
// Gaussian surface integral over the two hyperplanes {x_1 = +-t}.
double strip_area(double t);

// ---- generic measures -------------------------------------------------

// Gaussian perimeter of a surface: closed form for the homogeneous families,
// grid quadrature otherwise.
double gaussian_perimeter(const Surface& s, int resolution = 2048);

// Gaussian volume of the region a surface encloses. Closed forms where they
// exist; for compact surfaces, a flux quadrature of the radial field
// F = f(|x|) x/|x| with div F = gamma. Unbounded surfaces without a closed
// form are rejected (UnboundedRegionWithoutClosedForm).
double gaussian_volume(const Surface& s, int resolution = 2048);

// Flux-form volume from an existing grid (any ambient dimension >= 2).
double flux_volume(const QuadratureGrid& g);

// ---- constraint solving -----------------------------------------------

// Scale parameter of each family reaching a prescribed enclosed volume
// c in (0,1); |volume - c| < 1e-12 at the returned parameter.
double ball_radius_for_volume(int d, double c);
double cylinder_radius_for_volume(int k, double c);
double slab_halfwidth_for_volume(double c);

// ---- reference tables -------------------------------------------------

struct TableRow {
  int n;         // surface dimension (ambient n+1)
  double c;      // enclosed Gaussian volume
  double r;      // ball radius reaching c
  double perimeter;
};

// Ball rows for the requested dimensions and volume fractions.
std::vector<TableRow> ball_table(const std::vector<int>& ns,
                                 const std::vector<double>& cs);

// Large-n behaviour of the Gaussian ball measure at radius
// sqrt(n + s sqrt(2n)): the normal limit with its first skewness correction,
// next to the exact value.
struct BallExpansion {
  double exact;
  double approx;
};
BallExpansion ball_expansion(int n, double s);

}  // namespace gslab
