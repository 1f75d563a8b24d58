#include "gslab/surface.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "gslab/detail.hpp"
#include "gslab/errors.hpp"

namespace gslab {

namespace {

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void chart_error(const std::string& what) {
  fail_pre("ChartOutOfRange", what);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<Vec> detail::complement_frame(const Vec& nrm) {
  const int d = static_cast<int>(nrm.size());
  std::vector<Vec> frame;
  for (int j = 0; j < d && static_cast<int>(frame.size()) < d - 1; ++j) {
    Vec v(d, 0.0);
    v[j] = 1.0;
    v = v - dot(v, nrm) * nrm;
    for (const Vec& f : frame) v = v - dot(v, f) * f;
    double nn = norm(v);
    if (nn > 1e-8) frame.push_back((1.0 / nn) * v);
  }
  return frame;
}

using detail::complement_frame;

Vec CurvaturePoint::tangential(const Vec& v) const { return v - dot(v, N) * N; }

double CurvaturePoint::shape_image_norm2(const Vec& v) const {
  double s = 0.0;
  for (std::size_t i = 0; i < principal.size(); ++i) {
    double c = dot(v, frame[i]);
    s += principal[i] * principal[i] * c * c;
  }
  return s;
}

double QuadratureGrid::total() const {
  double s = 0.0;
  for (double wi : w) s += wi;
  return s;
}

double QuadratureGrid::integrate(const std::vector<double>& f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * f[i];
  return s;
}

double gauss_density(const Vec& x) {
  return std::pow(2.0 * kPi, -0.5 * static_cast<double>(x.size())) *
         std::exp(-0.5 * norm2(x));
}

double Surface::lambda() const { return std::numeric_limits<double>::quiet_NaN(); }

// ---------------------------------------------------------------- sphere

SphereSurface::SphereSurface(double r_, int n_) : r(r_), n(n_) {}

CurvaturePoint SphereSurface::at(const Vec& chart) const {
  if (static_cast<int>(chart.size()) != n)
    chart_error("sphere chart needs n angles");
  Vec omega;
  switch (n) {
    case 1:
      omega = {std::cos(chart[0]), std::sin(chart[0])};
      break;
    case 2: {
      double ph = chart[0], th = chart[1];
      if (ph < 0.0 || ph > kPi) chart_error("polar angle outside [0,pi]");
      omega = {std::sin(ph) * std::cos(th), std::sin(ph) * std::sin(th), std::cos(ph)};
      break;
    }
    case 3: {
      double p1 = chart[0], p2 = chart[1], th = chart[2];
      if (p1 < 0.0 || p1 > kPi || p2 < 0.0 || p2 > kPi)
        chart_error("polar angles outside [0,pi]");
      omega = {std::sin(p1) * std::sin(p2) * std::cos(th),
               std::sin(p1) * std::sin(p2) * std::sin(th),
               std::sin(p1) * std::cos(p2), std::cos(p1)};
      break;
    }
    default:
      fail_pre("UnsupportedSurface", "sphere charts cover n in {1,2,3}");
  }
  CurvaturePoint p;
  p.x = r * omega;
  p.N = omega;
  p.H = n / r;
  p.A2 = n / (r * r);
  p.Aop2 = 1.0 / (r * r);
  p.principal.assign(n, -1.0 / r);
  p.frame = complement_frame(omega);
  return p;
}

std::string SphereSurface::describe() const {
  return "sphere r=" + fmt(r) + " n=" + std::to_string(n);
}

// ---------------------------------------------------------------- cylinder

CylinderSurface::CylinderSurface(double r_, int k_, int n_) : r(r_), k(k_), n(n_) {}

CurvaturePoint CylinderSurface::at(const Vec& chart) const {
  // chart: k sphere angles (or a +-1 side entry when k=0) followed by the
  // n-k coordinates of the flat factor
  const int expect = (k == 0) ? n + 1 : n;
  if (static_cast<int>(chart.size()) != expect)
    chart_error("cylinder chart needs the sphere coordinates plus n-k heights");
  Vec omega;  // unit vector in R^{k+1}
  int used = 0;
  if (k == 0) {
    double s = chart[0];
    used = 1;
    if (std::fabs(std::fabs(s) - 1.0) > 1e-9) chart_error("side entry must be +-1");
    omega = {s > 0 ? 1.0 : -1.0};
  } else if (k == 1) {
    omega = {std::cos(chart[0]), std::sin(chart[0])};
    used = 1;
  } else if (k == 2) {
    double ph = chart[0], th = chart[1];
    if (ph < 0.0 || ph > kPi) chart_error("polar angle outside [0,pi]");
    omega = {std::sin(ph) * std::cos(th), std::sin(ph) * std::sin(th), std::cos(ph)};
    used = 2;
  } else {
    fail_pre("UnsupportedSurface", "cylinder charts cover k in {0,1,2}");
  }

  const int d = n + 1;
  CurvaturePoint p;
  p.x.assign(d, 0.0);
  p.N.assign(d, 0.0);
  for (int i = 0; i <= k; ++i) {
    p.x[i] = r * omega[i];
    p.N[i] = omega[i];
  }
  for (int i = used; i < expect; ++i) p.x[k + 1 + (i - used)] = chart[i];
  p.H = k / r;
  p.A2 = k / (r * r);
  p.Aop2 = (k > 0) ? 1.0 / (r * r) : 0.0;
  p.principal.assign(n, 0.0);
  p.frame.assign(n, Vec(d, 0.0));
  // sphere-factor tangent directions carry the curvature
  std::vector<Vec> sf = complement_frame(omega);
  for (int i = 0; i < k; ++i) {
    p.principal[i] = -1.0 / r;
    for (int j = 0; j <= k; ++j) p.frame[i][j] = sf[i][j];
  }
  for (int i = k; i < n; ++i) p.frame[i][i + 1] = 1.0;
  return p;
}

std::string CylinderSurface::describe() const {
  return "cylinder r=" + fmt(r) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
}

// ---------------------------------------------------------------- strip

StripSurface::StripSurface(double t_, int d_) : t(t_), d(d_) {}

CurvaturePoint StripSurface::at(const Vec& chart) const {
  // chart carries a discrete side entry (+-1) followed by the d-1 tangential
  // coordinates of the chosen hyperplane
  if (static_cast<int>(chart.size()) != d)
    chart_error("strip chart needs a side entry plus d-1 heights");
  double s = chart[0];
  if (std::fabs(std::fabs(s) - 1.0) > 1e-9) chart_error("side entry must be +-1");
  CurvaturePoint p;
  p.x.assign(d, 0.0);
  p.N.assign(d, 0.0);
  p.x[0] = (s > 0 ? t : -t);
  p.N[0] = (s > 0 ? 1.0 : -1.0);
  for (int i = 1; i < d; ++i) p.x[i] = chart[i];
  p.H = 0.0;
  p.A2 = 0.0;
  p.Aop2 = 0.0;
  p.principal.assign(d - 1, 0.0);
  p.frame.assign(d - 1, Vec(d, 0.0));
  for (int i = 0; i < d - 1; ++i) p.frame[i][i + 1] = 1.0;
  return p;
}

std::string StripSurface::describe() const {
  return "strip t=" + fmt(t) + " d=" + std::to_string(d);
}

// ---------------------------------------------------------------- ellipsoid

EllipsoidSurface::EllipsoidSurface(std::vector<double> semi_) : semi(std::move(semi_)) {}

// 3-d ellipsoid point in the u = cos(polar) chart; handles the full
// first/second fundamental form reduction to principal data.
CurvaturePoint detail::ellipsoid3_point(double a, double b, double c, double u, double th) {
  double s2 = 1.0 - u * u;
  double s = std::sqrt(std::max(s2, 0.0));
  double ct = std::cos(th), st = std::sin(th);
  CurvaturePoint p;
  p.x = {a * s * ct, b * s * st, c * u};
  Vec nr = {b * c * s * ct, a * c * s * st, a * b * u};
  p.N = normalized(nr);
  Vec Xu = {-a * (u / s) * ct, -b * (u / s) * st, c};
  Vec Xt = {-a * s * st, b * s * ct, 0.0};
  double E = dot(Xu, Xu), F = dot(Xu, Xt), G = dot(Xt, Xt);
  Vec Xuu = {-a * ct / (s * s2), -b * st / (s * s2), 0.0};
  Vec Xut = {a * (u / s) * st, -b * (u / s) * ct, 0.0};
  Vec Xtt = {-a * s * ct, -b * s * st, 0.0};
  double L = dot(Xuu, p.N), M = dot(Xut, p.N), P = dot(Xtt, p.N);
  double A = E * G - F * F;
  double B = E * P + G * L - 2.0 * F * M;
  double C = L * P - M * M;
  double disc = std::max(B * B - 4.0 * A * C, 0.0);
  double rt = std::sqrt(disc);
  double a1 = (B - rt) / (2.0 * A);
  double a2 = (B + rt) / (2.0 * A);
  p.principal = {a1, a2};
  p.H = -(a1 + a2);
  p.A2 = a1 * a1 + a2 * a2;
  p.Aop2 = std::max(a1 * a1, a2 * a2);
  p.frame.resize(2);
  if (rt < 1e-10 * (std::fabs(a1) + std::fabs(a2) + 1.0)) {
    // umbilic: any orthonormal tangent pair diagonalizes
    p.frame = complement_frame(p.N);
  } else {
    for (int i = 0; i < 2; ++i) {
      double ai = p.principal[i];
      // rows of (II - a I); take the larger one for a stable null direction
      double r1x = L - ai * E, r1y = M - ai * F;
      double r2x = M - ai * F, r2y = P - ai * G;
      double v1, v2;
      if (r1x * r1x + r1y * r1y >= r2x * r2x + r2y * r2y) {
        v1 = -r1y;
        v2 = r1x;
      } else {
        v1 = -r2y;
        v2 = r2x;
      }
      Vec e = v1 * Xu + v2 * Xt;
      p.frame[i] = normalized(e);
    }
    // re-orthogonalize the pair against roundoff
    p.frame[1] = normalized(p.frame[1] - dot(p.frame[1], p.frame[0]) * p.frame[0]);
  }
  return p;
}

CurvaturePoint detail::ellipse_point(double a, double b, double th) {
  double ct = std::cos(th), st = std::sin(th);
  double m = std::sqrt(a * a * st * st + b * b * ct * ct);
  CurvaturePoint p;
  p.x = {a * ct, b * st};
  p.N = {b * ct / m, a * st / m};
  double kappa = a * b / (m * m * m);
  p.H = kappa;
  p.A2 = kappa * kappa;
  p.Aop2 = kappa * kappa;
  p.principal = {-kappa};
  p.frame = {Vec{-a * st / m, b * ct / m}};
  return p;
}

CurvaturePoint EllipsoidSurface::at(const Vec& chart) const {
  if (ambient() == 2) {
    if (chart.size() != 1) chart_error("ellipse chart is one angle");
    return detail::ellipse_point(semi[0], semi[1], chart[0]);
  }
  if (chart.size() != 2) chart_error("ellipsoid chart is polar and azimuth angles");
  double ph = chart[0];
  if (ph <= 0.0 || ph >= kPi)
    chart_error("polar angle must lie strictly inside (0,pi)");
  return detail::ellipsoid3_point(semi[0], semi[1], semi[2], std::cos(ph), chart[1]);
}

std::string EllipsoidSurface::describe() const {
  std::string s = "ellipsoid a=" + fmt(semi[0]) + " b=" + fmt(semi[1]);
  if (semi.size() == 3) s += " c=" + fmt(semi[2]);
  return s;
}

// ---------------------------------------------------------------- curve

CurveSurface::CurveSurface(std::vector<std::array<double, 2>> nodes)
    : nodes_(std::move(nodes)) {
  const int m = static_cast<int>(nodes_.size());
  if (m < 3) fail_pre("OpenCurve", "a closed polyline needs at least 3 nodes");

  // orient counterclockwise so the rotate-right normal points outward
  double area2 = 0.0;
  for (int i = 0; i < m; ++i) {
    const auto& p = nodes_[i];
    const auto& q = nodes_[(i + 1) % m];
    area2 += p[0] * q[1] - q[0] * p[1];
  }
  if (area2 < 0.0) std::reverse(nodes_.begin() + 1, nodes_.end());

  arc_.assign(m, 0.0);
  double scale = 0.0;
  std::vector<double> chord(m);
  for (int i = 0; i < m; ++i) {
    const auto& p = nodes_[i];
    const auto& q = nodes_[(i + 1) % m];
    chord[i] = std::hypot(q[0] - p[0], q[1] - p[1]);
    scale = std::max({scale, std::fabs(p[0]), std::fabs(p[1])});
  }
  std::vector<double> sorted(chord);
  std::sort(sorted.begin(), sorted.end());
  double median = sorted[m / 2];
  if (median <= 0.0) fail_pre("OpenCurve", "polyline has coincident nodes");
  if (chord[m - 1] > 5.0 * median)
    fail_pre("OpenCurve", "polyline does not close: end gap " + fmt(chord[m - 1]));
  for (int i = 1; i < m; ++i) arc_[i] = arc_[i - 1] + chord[i - 1];
  length_ = arc_[m - 1] + chord[m - 1];

  symmetric_ = (m % 2 == 0);
  if (symmetric_) {
    double worst = 0.0;
    for (int i = 0; i < m / 2; ++i) {
      const auto& p = nodes_[i];
      const auto& q = nodes_[i + m / 2];
      worst = std::max(worst, std::hypot(p[0] + q[0], p[1] + q[1]));
    }
    symmetric_ = worst <= 1e-6 * std::max(scale, 1.0);
  }
}

// centered differences in arclength on a cyclic polyline; order 4 where the
// spacing is locally uniform, order 2 otherwise
CurvaturePoint detail::curve_node_data(const std::vector<std::array<double, 2>>& nd, int i) {
  const int m = static_cast<int>(nd.size());
  const auto& xm = nd[(i + m - 1) % m];
  const auto& x0 = nd[i];
  const auto& xp = nd[(i + 1) % m];
  double hm = std::hypot(x0[0] - xm[0], x0[1] - xm[1]);
  double hp = std::hypot(xp[0] - x0[0], xp[1] - x0[1]);
  Vec t = {(xp[0] - xm[0]) / (hm + hp), (xp[1] - xm[1]) / (hm + hp)};
  Vec xss = {2.0 * ((xp[0] - x0[0]) / hp - (x0[0] - xm[0]) / hm) / (hm + hp),
             2.0 * ((xp[1] - x0[1]) / hp - (x0[1] - xm[1]) / hm) / (hm + hp)};
  if (m >= 8) {
    const auto& xm2 = nd[(i + m - 2) % m];
    const auto& xp2 = nd[(i + 2) % m];
    double hm2 = std::hypot(xm[0] - xm2[0], xm[1] - xm2[1]);
    double hp2 = std::hypot(xp2[0] - xp[0], xp2[1] - xp[1]);
    double h = 0.25 * (hm2 + hm + hp + hp2);
    double skew = std::max({std::fabs(hm2 - h), std::fabs(hm - h),
                            std::fabs(hp - h), std::fabs(hp2 - h)});
    if (skew <= 1e-6 * h) {
      for (int c = 0; c < 2; ++c) {
        t[c] = (xm2[c] - 8.0 * xm[c] + 8.0 * xp[c] - xp2[c]) / (12.0 * h);
        xss[c] = (-xm2[c] + 16.0 * xm[c] - 30.0 * x0[c] + 16.0 * xp[c] -
                  xp2[c]) /
                 (12.0 * h * h);
      }
    }
  }
  t = normalized(t);
  CurvaturePoint p;
  p.x = {x0[0], x0[1]};
  p.N = {t[1], -t[0]};
  p.H = -dot(xss, p.N);
  p.A2 = p.H * p.H;
  p.Aop2 = p.A2;
  p.principal = {-p.H};
  p.frame = {t};
  return p;
}

namespace {

// nearest node of a cyclic arclength table (arc ascending from 0, total len)
int nearest_arc_node(const std::vector<double>& arc, double len, double s) {
  const int m = static_cast<int>(arc.size());
  auto it = std::upper_bound(arc.begin(), arc.end(), s);
  int i = static_cast<int>(it - arc.begin()) - 1;  // arc[i] <= s
  double ahead = (i + 1 < m ? arc[i + 1] : len) - s;
  return (ahead < s - arc[i]) ? (i + 1) % m : i;
}

}  // namespace

CurvaturePoint CurveSurface::at(const Vec& chart) const {
  if (chart.size() != 1) chart_error("curve chart is one arclength value");
  double s = chart[0];
  if (s < 0.0 || s > length_) chart_error("arclength outside [0, length]");
  return detail::curve_node_data(nodes_, nearest_arc_node(arc_, length_, s));
}

std::string CurveSurface::describe() const {
  if (!source.empty()) return "curve file=" + source;
  return "curve nodes=" + std::to_string(node_count());
}

// ---------------------------------------------------------------- revolution

RevolutionSurface::RevolutionSurface(std::vector<std::array<double, 2>> profile)
    : profile_(std::move(profile)) {
  const int m = static_cast<int>(profile_.size());
  if (m < 3) fail_pre("OpenCurve", "a closed profile needs at least 3 nodes");
  for (const auto& p : profile_)
    if (p[0] <= 0.0)
      fail_pre("NonPositiveRadius", "profile must keep rho > 0 away from the axis");

  double area2 = 0.0;
  for (int i = 0; i < m; ++i) {
    const auto& p = profile_[i];
    const auto& q = profile_[(i + 1) % m];
    area2 += p[0] * q[1] - q[0] * p[1];
  }
  if (area2 < 0.0) std::reverse(profile_.begin() + 1, profile_.end());

  arc_.assign(m, 0.0);
  std::vector<double> chord(m);
  for (int i = 0; i < m; ++i) {
    const auto& p = profile_[i];
    const auto& q = profile_[(i + 1) % m];
    chord[i] = std::hypot(q[0] - p[0], q[1] - p[1]);
  }
  std::vector<double> sorted(chord);
  std::sort(sorted.begin(), sorted.end());
  if (sorted[m / 2] <= 0.0 || chord[m - 1] > 5.0 * sorted[m / 2])
    fail_pre("OpenCurve", "profile polyline does not close");
  for (int i = 1; i < m; ++i) arc_[i] = arc_[i - 1] + chord[i - 1];
  length_ = arc_[m - 1] + chord[m - 1];

  // profile symmetric under z -> -z makes the surface antipodally symmetric
  symmetric_ = true;
  double scale = 1.0;
  for (const auto& p : profile_) scale = std::max({scale, p[0], std::fabs(p[1])});
  for (int i = 0; i < m && symmetric_; ++i) {
    bool found = false;
    for (int j = 0; j < m && !found; ++j)
      found = std::hypot(profile_[j][0] - profile_[i][0],
                         profile_[j][1] + profile_[i][1]) <= 1e-6 * scale;
    symmetric_ = found;
  }
}

namespace {

struct ProfileData {
  Vec T;       // (rho', z') unit
  Vec nu;      // in-plane exterior normal (z', -rho')
  double am;   // meridian shape eigenvalue
};

ProfileData profile_node_data(const std::vector<std::array<double, 2>>& nd, int i) {
  const int m = static_cast<int>(nd.size());
  const auto& xm = nd[(i + m - 1) % m];
  const auto& x0 = nd[i];
  const auto& xp = nd[(i + 1) % m];
  double hm = std::hypot(x0[0] - xm[0], x0[1] - xm[1]);
  double hp = std::hypot(xp[0] - x0[0], xp[1] - x0[1]);
  Vec t = normalized(Vec{(xp[0] - xm[0]) / (hm + hp), (xp[1] - xm[1]) / (hm + hp)});
  Vec xss = {2.0 * ((xp[0] - x0[0]) / hp - (x0[0] - xm[0]) / hm) / (hm + hp),
             2.0 * ((xp[1] - x0[1]) / hp - (x0[1] - xm[1]) / hm) / (hm + hp)};
  ProfileData d;
  d.T = t;
  d.nu = {t[1], -t[0]};
  d.am = dot(xss, d.nu);
  return d;
}

}  // namespace

CurvaturePoint detail::revolution_point(const std::vector<std::array<double, 2>>& prof,
                                        int i, double th) {
  ProfileData pd = profile_node_data(prof, i);
  double rho = prof[i][0], z = prof[i][1];
  double ct = std::cos(th), st = std::sin(th);
  CurvaturePoint p;
  p.x = {rho * ct, rho * st, z};
  p.N = {pd.nu[0] * ct, pd.nu[0] * st, pd.nu[1]};
  double ap = -pd.nu[0] / rho;  // parallel circle shape eigenvalue
  p.principal = {pd.am, ap};
  p.H = -(pd.am + ap);
  p.A2 = pd.am * pd.am + ap * ap;
  p.Aop2 = std::max(pd.am * pd.am, ap * ap);
  p.frame = {Vec{pd.T[0] * ct, pd.T[0] * st, pd.T[1]}, Vec{-st, ct, 0.0}};
  return p;
}

CurvaturePoint RevolutionSurface::at(const Vec& chart) const {
  if (chart.size() != 2) chart_error("revolution chart is arclength and angle");
  double s = chart[0];
  if (s < 0.0 || s > length_) chart_error("arclength outside [0, length]");
  return detail::revolution_point(profile_, nearest_arc_node(arc_, length_, s), chart[1]);
}

std::string RevolutionSurface::describe() const {
  if (!source.empty()) return "revolution file=" + source;
  return "revolution nodes=" + std::to_string(profile_.size());
}

// ---------------------------------------------------------------- factories

std::unique_ptr<Surface> make_sphere(double r, int n) {
  if (r <= 0.0) fail_pre("NonPositiveRadius", "sphere radius must be positive");
  if (n < 1) fail_pre("UnsupportedSurface", "sphere dimension must be >= 1");
  return std::make_unique<SphereSurface>(r, n);
}

std::unique_ptr<Surface> make_cylinder(double r, int k, int n) {
  if (r <= 0.0) fail_pre("NonPositiveRadius", "cylinder radius must be positive");
  if (n < 1 || k < 0 || k > n)
    fail_pre("UnsupportedSurface", "cylinder needs 0 <= k <= n, n >= 1");
  return std::make_unique<CylinderSurface>(r, k, n);
}

std::unique_ptr<Surface> make_strip(double t, int d) {
  if (t <= 0.0) fail_pre("NonPositiveRadius", "strip half-width must be positive");
  if (d < 1) fail_pre("UnsupportedSurface", "strip ambient dimension must be >= 1");
  return std::make_unique<StripSurface>(t, d);
}

std::unique_ptr<Surface> make_ellipsoid(std::vector<double> semi) {
  if (semi.size() != 2 && semi.size() != 3)
    fail_pre("UnsupportedSurface", "ellipsoids take 2 or 3 semi-axes");
  for (double a : semi)
    if (a <= 0.0) fail_pre("NonPositiveRadius", "semi-axes must be positive");
  return std::make_unique<EllipsoidSurface>(std::move(semi));
}

std::unique_ptr<Surface> make_curve(std::vector<std::array<double, 2>> nodes) {
  return std::make_unique<CurveSurface>(std::move(nodes));
}

std::unique_ptr<Surface> make_revolution(std::vector<std::array<double, 2>> profile) {
  return std::make_unique<RevolutionSurface>(std::move(profile));
}

// ---------------------------------------------------------------- text io

namespace {

std::vector<std::array<double, 3>> read_csv3(const std::string& path,
                                             const std::string& header) {
  std::ifstream in(path);
  if (!in) fail_usage("FileUnreadable", "cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) fail_usage("FileUnreadable", path + " is empty");
  auto strip = [](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](char c) { return c == ' ' || c == '\r'; }),
            s.end());
    return s;
  };
  if (strip(line) != header)
    fail_usage("FileUnreadable", path + ": expected header '" + header + "'");
  std::vector<std::array<double, 3>> rows;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    std::array<double, 3> row{};
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    if (!(ss >> row[0] >> row[1] >> row[2]))
      fail_usage("FileUnreadable", path + ": malformed row '" + line + "'");
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::unique_ptr<Surface> load_curve_csv(const std::string& path) {
  auto rows = read_csv3(path, "s,x,y");
  std::vector<std::array<double, 2>> nodes;
  nodes.reserve(rows.size());
  for (const auto& r : rows) nodes.push_back({r[1], r[2]});
  // drop an explicit closing repeat of the first node
  if (nodes.size() > 3) {
    const auto& a = nodes.front();
    const auto& b = nodes.back();
    if (std::hypot(a[0] - b[0], a[1] - b[1]) < 1e-9) nodes.pop_back();
  }
  auto surf = std::make_unique<CurveSurface>(std::move(nodes));
  surf->source = path;
  return surf;
}

void save_curve_csv(const std::string& path, const CurveSurface& c) {
  std::ofstream out(path);
  if (!out) fail_usage("FileUnreadable", "cannot write " + path);
  out << "s,x,y\n";
  const auto& nd = c.nodes();
  double s = 0.0;
  char buf[128];
  for (std::size_t i = 0; i < nd.size(); ++i) {
    if (i > 0)
      s += std::hypot(nd[i][0] - nd[i - 1][0], nd[i][1] - nd[i - 1][1]);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", s, nd[i][0], nd[i][1]);
    out << buf;
  }
}

std::unique_ptr<Surface> load_revolution_csv(const std::string& path) {
  auto rows = read_csv3(path, "s,rho,z");
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i][0] <= rows[i - 1][0])
      fail_pre("NonMonotoneProfile", "profile arclength column must increase");
  std::vector<std::array<double, 2>> prof;
  prof.reserve(rows.size());
  for (const auto& r : rows) prof.push_back({r[1], r[2]});
  if (prof.size() > 3) {
    const auto& a = prof.front();
    const auto& b = prof.back();
    if (std::hypot(a[0] - b[0], a[1] - b[1]) < 1e-9) prof.pop_back();
  }
  auto surf = std::make_unique<RevolutionSurface>(std::move(prof));
  surf->source = path;
  return surf;
}

std::unique_ptr<Surface> parse_surface(const std::string& text) {
  std::istringstream ss(text);
  std::string kind;
  ss >> kind;
  std::vector<std::pair<std::string, std::string>> kv;
  std::string tok;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      fail_usage("BadSurfaceSpec", "expected key=value, got '" + tok + "'");
    kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  auto get = [&](const std::string& key, bool required = true) -> std::string {
    for (const auto& [k, v] : kv)
      if (k == key) return v;
    if (required)
      fail_usage("BadSurfaceSpec", kind + " spec needs " + key + "=");
    return {};
  };
  auto num = [&](const std::string& key) { return std::stod(get(key)); };
  auto integer = [&](const std::string& key) { return std::stoi(get(key)); };

  if (kind == "sphere") return make_sphere(num("r"), integer("n"));
  if (kind == "cylinder") return make_cylinder(num("r"), integer("k"), integer("n"));
  if (kind == "strip") return make_strip(num("t"), integer("d"));
  if (kind == "ellipsoid") {
    std::vector<double> semi = {num("a"), num("b")};
    std::string c = get("c", false);
    if (!c.empty()) semi.push_back(std::stod(c));
    return make_ellipsoid(std::move(semi));
  }
  if (kind == "curve") return load_curve_csv(get("file"));
  if (kind == "revolution") return load_revolution_csv(get("file"));
  fail_usage("BadSurfaceSpec", "unknown surface kind '" + kind + "'");
}

// ---------------------------------------------------------------- lambda

double lambda_fit(const QuadratureGrid& g) {
  double num = 0.0, den = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    num += g.w[i] * (g.pts[i].H - dot(g.pts[i].x, g.pts[i].N));
    den += g.w[i];
  }
  return num / den;
}

double lambda_residual(const QuadratureGrid& g, double lambda) {
  double worst = 0.0;
  for (int i = 0; i < g.size(); ++i)
    worst = std::max(worst,
                     std::fabs(g.pts[i].H - dot(g.pts[i].x, g.pts[i].N) - lambda));
  return worst;
}

}  // namespace gslab
