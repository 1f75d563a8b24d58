#pragma once
#include <array>
#include <memory>
#include <string>
#include <vector>

#include "gslab/vec.hpp"

namespace gslab {

// Pointwise second-order data of a hypersurface in R^{n+1}.
//
// Sign conventions, used consistently everywhere:
//   N is the exterior unit normal of the enclosed region.
//   The shape operator entries are a_ij = <D_{e_i} e_j, N>, so its
//   eigenvalues ("principal") are negative on the boundary of a convex body.
//   H = -sum(principal) = div N, positive on convex boundaries
//   (sphere of radius r: principal = -1/r each, H = n/r).
struct CurvaturePoint {
  Vec x;
  Vec N;
  double H = 0;
  double A2 = 0;    // squared Frobenius norm of the shape operator
  double Aop2 = 0;  // squared operator norm (largest squared eigenvalue)
  std::vector<double> principal;  // shape operator eigenvalues
  std::vector<Vec> frame;         // orthonormal principal directions, frame[i] <-> principal[i]

  // v minus its normal component
  Vec tangential(const Vec& v) const;
  // |A (tangential part of v)|^2 via the principal frame
  double shape_image_norm2(const Vec& v) const;
};

// Quadrature nodes with Gaussian-weighted surface measure: w[i] approximates
// gamma(x_i) dA_i with gamma(x) = (2 pi)^{-(n+1)/2} exp(-|x|^2/2), so
// total() is the Gaussian perimeter and integrate(f) the weighted integral.
struct QuadratureGrid {
  int ambient = 0;  // n+1
  std::vector<CurvaturePoint> pts;
  std::vector<double> w;

  // index of the node at -x for every node; empty when the surface (or its
  // sampling) is not antipodally symmetric
  std::vector<int> antipode;

  // neighbor lists for nodal-domain counting; empty when the sampling has no
  // usable mesh structure (product grids with Hermite factors, for instance)
  std::vector<std::vector<int>> adjacency;

  // 1-d chain data for curve-like grids: cumulative arclength per node and
  // total length; empty/zero otherwise
  std::vector<double> arc;
  double length = 0;

  // product-layout hints for grids of the form (compact factor) x R^f:
  // node index = base * flat_order^f + nested flat indices
  int flat_dims = 0;
  int flat_order = 0;

  int size() const { return static_cast<int>(pts.size()); }
  double total() const;
  double integrate(const std::vector<double>& f) const;
};

class Surface {
 public:
  virtual ~Surface() = default;
  virtual std::string kind() const = 0;
  virtual int ambient() const = 0;  // n+1
  int dim() const { return ambient() - 1; }
  virtual bool closed() const = 0;     // compact without boundary
  virtual bool symmetric() const = 0;  // invariant under x -> -x
  // exact soliton parameter for the homogeneous families, NaN when the
  // surface has no closed-form lambda (fit one with lambda_fit instead)
  virtual double lambda() const;
  virtual CurvaturePoint at(const Vec& chart) const = 0;
  virtual QuadratureGrid grid(int resolution) const = 0;
  virtual std::string describe() const = 0;
};

// Round sphere of radius r about the origin, dimension n, in R^{n+1}.
class SphereSurface : public Surface {
 public:
  SphereSurface(double r, int n);
  double r;
  int n;
  std::string kind() const override { return "sphere"; }
  int ambient() const override { return n + 1; }
  bool closed() const override { return true; }
  bool symmetric() const override { return true; }
  double lambda() const override { return n / r - r; }
  CurvaturePoint at(const Vec& chart) const override;
  QuadratureGrid grid(int resolution) const override;
  std::string describe() const override;
};

// Round cylinder r S^k x R^{n-k} in R^{n+1} (k = 0 degenerates to the strip,
// k = n to the sphere).
class CylinderSurface : public Surface {
 public:
  CylinderSurface(double r, int k, int n);
  double r;
  int k;
  int n;
  std::string kind() const override { return "cylinder"; }
  int ambient() const override { return n + 1; }
  bool closed() const override { return k == n; }
  bool symmetric() const override { return true; }
  double lambda() const override { return k / r - r; }
  CurvaturePoint at(const Vec& chart) const override;
  QuadratureGrid grid(int resolution) const override;
  std::string describe() const override;
};

// Boundary of the symmetric slab {|x_1| <= t} in R^d: two parallel
// hyperplanes.
class StripSurface : public Surface {
 public:
  StripSurface(double t, int d);
  double t;
  int d;
  std::string kind() const override { return "strip"; }
  int ambient() const override { return d; }
  bool closed() const override { return false; }
  bool symmetric() const override { return true; }
  double lambda() const override { return -t; }
  CurvaturePoint at(const Vec& chart) const override;
  QuadratureGrid grid(int resolution) const override;
  std::string describe() const override;
};

// Origin-centered ellipsoid with the given semi-axes (2 -> curve in R^2,
// 3 -> surface in R^3).
class EllipsoidSurface : public Surface {
 public:
  explicit EllipsoidSurface(std::vector<double> semi);
  std::vector<double> semi;
  std::string kind() const override { return "ellipsoid"; }
  int ambient() const override { return static_cast<int>(semi.size()); }
  bool closed() const override { return true; }
  bool symmetric() const override { return true; }
  CurvaturePoint at(const Vec& chart) const override;
  QuadratureGrid grid(int resolution) const override;
  std::string describe() const override;
};

// Closed polyline in R^2, stored counterclockwise; curvature by centered
// differences in arclength with periodic wraparound.
class CurveSurface : public Surface {
 public:
  explicit CurveSurface(std::vector<std::array<double, 2>> nodes);
  std::string kind() const override { return "curve"; }
  int ambient() const override { return 2; }
  bool closed() const override { return true; }
  bool symmetric() const override { return symmetric_; }
  CurvaturePoint at(const Vec& chart) const override;
  QuadratureGrid grid(int resolution) const override;
  std::string describe() const override;

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const std::vector<std::array<double, 2>>& nodes() const { return nodes_; }
  const std::vector<double>& arcs() const { return arc_; }
  double total_length() const { return length_; }

  std::string source;  // originating CSV path, when loaded from one

 private:
  std::vector<std::array<double, 2>> nodes_;
  std::vector<double> arc_;  // cumulative arclength, arc_[0] = 0
  double length_ = 0;
  bool symmetric_ = false;
};

// Closed profile s -> (rho(s), z(s)) with rho > 0, rotated about the z-axis
// in R^3 (torus-like surfaces).
class RevolutionSurface : public Surface {
 public:
  explicit RevolutionSurface(std::vector<std::array<double, 2>> profile);
  std::string kind() const override { return "revolution"; }
  int ambient() const override { return 3; }
  bool closed() const override { return true; }
  bool symmetric() const override { return symmetric_; }
  CurvaturePoint at(const Vec& chart) const override;
  QuadratureGrid grid(int resolution) const override;
  std::string describe() const override;

  const std::vector<std::array<double, 2>>& profile() const { return profile_; }
  const std::vector<double>& arcs() const { return arc_; }
  double total_length() const { return length_; }

  std::string source;  // originating CSV path, when loaded from one

 private:
  std::vector<std::array<double, 2>> profile_;
  std::vector<double> arc_;
  double length_ = 0;
  bool symmetric_ = false;  // profile even in z under the antipodal pairing
};

// Factories. Each validates its inputs (NonPositiveRadius, OpenCurve,
// NonMonotoneProfile, ...) and throws gslab::Error on violation.
std::unique_ptr<Surface> make_sphere(double r, int n);
std::unique_ptr<Surface> make_cylinder(double r, int k, int n);
std::unique_ptr<Surface> make_strip(double t, int d);
std::unique_ptr<Surface> make_ellipsoid(std::vector<double> semi);
std::unique_ptr<Surface> make_curve(std::vector<std::array<double, 2>> nodes);
std::unique_ptr<Surface> make_revolution(std::vector<std::array<double, 2>> profile);

// One-line serialization, e.g. "sphere r=1.414 n=2" or "curve file=g3.csv";
// parse_surface accepts exactly what describe() emits.
std::unique_ptr<Surface> parse_surface(const std::string& text);

// Curve CSV exchange format: header "s,x,y", one row per node.
std::unique_ptr<Surface> load_curve_csv(const std::string& path);
void save_curve_csv(const std::string& path, const CurveSurface& c);

// Revolution profile CSV: header "s,rho,z" with strictly increasing s.
std::unique_ptr<Surface> load_revolution_csv(const std::string& path);

// Gaussian-weighted best fit of the soliton parameter, and the worst
// pointwise defect |H - <x,N> - lambda| over the grid.
double lambda_fit(const QuadratureGrid& g);
double lambda_residual(const QuadratureGrid& g, double lambda);

// Ambient Gaussian density (2 pi)^{-d/2} exp(-|x|^2/2).
double gauss_density(const Vec& x);

}  // namespace gslab
