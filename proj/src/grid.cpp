#include <algorithm>
#include <cmath>

#include "gslab/detail.hpp"
#include "gslab/errors.hpp"
#include "gslab/quadrules.hpp"
#include "gslab/surface.hpp"

namespace gslab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_resolution(int res) {
  if (res < 8) fail_pre("ResolutionTooLow", "quadrature grids need resolution >= 8");
}

int make_even(int m) { return m + (m % 2); }

// Unit S^k sampling with plain (unweighted) surface measure, sum w = |S^k|.
// Node count approximately matches target; nodes close under the antipodal
// map exactly, with the pairing recorded in antipode.
struct SphereNodes {
  std::vector<Vec> omega;
  std::vector<double> w;
  std::vector<int> antipode;
  int mu = 0, mt = 0;  // mesh shape for k = 2 adjacency
};

SphereNodes unit_sphere_nodes(int k, int target) {
  using num::gauss_legendre;
  SphereNodes out;
  if (k == 0) {
    out.omega = {Vec{1.0}, Vec{-1.0}};
    out.w = {1.0, 1.0};
    out.antipode = {1, 0};
  } else if (k == 1) {
    int m = make_even(std::max(8, target));
    out.mt = m;
    for (int j = 0; j < m; ++j) {
      double th = 2.0 * kPi * j / m;
      out.omega.push_back({std::cos(th), std::sin(th)});
      out.w.push_back(2.0 * kPi / m);
      out.antipode.push_back((j + m / 2) % m);
    }
  } else if (k == 2) {
    int mu = std::max(4, make_even(static_cast<int>(std::lround(std::sqrt(target / 2.0)))));
    int mt = 2 * mu;
    out.mu = mu;
    out.mt = mt;
    num::Rule1D gl = gauss_legendre(mu);
    for (int a = 0; a < mu; ++a) {
      double u = gl.x[a], s = std::sqrt(1.0 - u * u);
      for (int j = 0; j < mt; ++j) {
        double th = 2.0 * kPi * j / mt;
        out.omega.push_back({s * std::cos(th), s * std::sin(th), u});
        out.w.push_back(gl.w[a] * 2.0 * kPi / mt);
        out.antipode.push_back((mu - 1 - a) * mt + (j + mt / 2) % mt);
      }
    }
  } else if (k == 3) {
    int m = std::max(4, make_even(static_cast<int>(std::lround(std::cbrt(target / 2.0)))));
    int mt = 2 * m;
    num::Rule1D gl = gauss_legendre(m);
    for (int a = 0; a < m; ++a) {
      double u1 = gl.x[a], s1 = std::sqrt(1.0 - u1 * u1);
      for (int b = 0; b < m; ++b) {
        double u2 = gl.x[b], s2 = std::sqrt(1.0 - u2 * u2);
        for (int j = 0; j < mt; ++j) {
          double th = 2.0 * kPi * j / mt;
          out.omega.push_back({s1 * s2 * std::cos(th), s1 * s2 * std::sin(th),
                               s1 * u2, u1});
          out.w.push_back(s1 * gl.w[a] * gl.w[b] * 2.0 * kPi / mt);
          out.antipode.push_back(((m - 1 - a) * m + (m - 1 - b)) * mt +
                                 (j + mt / 2) % mt);
        }
      }
    }
  } else {
    fail_pre("UnsupportedSurface", "sphere factor grids cover k <= 3");
  }
  return out;
}

// sphere-factor curvature data embedded in R^d with f flat trailing directions
CurvaturePoint product_point(double r, const Vec& omega, const std::vector<double>& flat,
                             int n) {
  const int kk = static_cast<int>(omega.size()) - 1;
  const int d = n + 1;
  CurvaturePoint p;
  p.x.assign(d, 0.0);
  p.N.assign(d, 0.0);
  for (int i = 0; i <= kk; ++i) {
    p.x[i] = r * omega[i];
    p.N[i] = omega[i];
  }
  for (std::size_t i = 0; i < flat.size(); ++i) p.x[kk + 1 + i] = flat[i];
  p.H = kk / r;
  p.A2 = kk / (r * r);
  p.Aop2 = (kk > 0) ? 1.0 / (r * r) : 0.0;
  p.principal.assign(n, 0.0);
  p.frame.assign(n, Vec(d, 0.0));
  std::vector<Vec> sf = detail::complement_frame(omega);
  for (int i = 0; i < kk; ++i) {
    p.principal[i] = -1.0 / r;
    for (int j = 0; j <= kk; ++j) p.frame[i][j] = sf[i][j];
  }
  for (int i = kk; i < n; ++i) p.frame[i][i + 1] = 1.0;
  return p;
}

}  // namespace

QuadratureGrid SphereSurface::grid(int resolution) const {
  require_resolution(resolution);
  if (n > 3) fail_pre("UnsupportedSurface", "sphere grids cover n <= 3");
  SphereNodes sn = unit_sphere_nodes(n, resolution);
  QuadratureGrid g;
  g.ambient = n + 1;
  const double gamma = std::pow(2.0 * kPi, -0.5 * (n + 1)) * std::exp(-0.5 * r * r);
  const double rn = std::pow(r, n);
  const int m = static_cast<int>(sn.omega.size());
  g.pts.reserve(m);
  g.w.reserve(m);
  for (int i = 0; i < m; ++i) {
    g.pts.push_back(product_point(r, sn.omega[i], {}, n));
    g.w.push_back(sn.w[i] * rn * gamma);
  }
  g.antipode = sn.antipode;
  if (n == 1) {
    g.adjacency.resize(m);
    g.arc.resize(m);
    for (int i = 0; i < m; ++i) {
      g.adjacency[i] = {(i + m - 1) % m, (i + 1) % m};
      g.arc[i] = r * 2.0 * kPi * i / m;
    }
    g.length = 2.0 * kPi * r;
  } else if (n == 2) {
    g.adjacency.resize(m);
    for (int a = 0; a < sn.mu; ++a)
      for (int j = 0; j < sn.mt; ++j) {
        int idx = a * sn.mt + j;
        auto& nb = g.adjacency[idx];
        nb.push_back(a * sn.mt + (j + 1) % sn.mt);
        nb.push_back(a * sn.mt + (j + sn.mt - 1) % sn.mt);
        if (a > 0) nb.push_back((a - 1) * sn.mt + j);
        if (a + 1 < sn.mu) nb.push_back((a + 1) * sn.mt + j);
      }
  }
  return g;
}

QuadratureGrid CylinderSurface::grid(int resolution) const {
  require_resolution(resolution);
  const int flats = n - k;
  if (k > 3 || flats > 2)
    fail_pre("UnsupportedSurface", "cylinder grids cover k <= 3 and n-k <= 2");
  const int fo = 32;  // Hermite order per flat factor
  int sphere_target = resolution;
  for (int i = 0; i < flats; ++i) sphere_target /= fo;
  SphereNodes sn = unit_sphere_nodes(k, std::max(8, sphere_target));
  num::Rule1D gh = num::gauss_hermite(fo);

  QuadratureGrid g;
  g.ambient = n + 1;
  g.flat_dims = flats;
  g.flat_order = flats > 0 ? fo : 0;
  const double gamma_s = std::pow(2.0 * kPi, -0.5 * (k + 1)) * std::exp(-0.5 * r * r);
  const double rk = std::pow(r, k);
  const int ms = static_cast<int>(sn.omega.size());

  if (flats == 0) {
    for (int i = 0; i < ms; ++i) {
      g.pts.push_back(product_point(r, sn.omega[i], {}, n));
      g.w.push_back(sn.w[i] * rk * gamma_s);
    }
    g.antipode = sn.antipode;
    return g;
  }
  for (int i = 0; i < ms; ++i) {
    if (flats == 1) {
      for (int j = 0; j < fo; ++j) {
        g.pts.push_back(product_point(r, sn.omega[i], {gh.x[j]}, n));
        g.w.push_back(sn.w[i] * rk * gamma_s * gh.w[j]);
        g.antipode.push_back(sn.antipode[i] * fo + (fo - 1 - j));
      }
    } else {
      for (int j1 = 0; j1 < fo; ++j1)
        for (int j2 = 0; j2 < fo; ++j2) {
          g.pts.push_back(product_point(r, sn.omega[i], {gh.x[j1], gh.x[j2]}, n));
          g.w.push_back(sn.w[i] * rk * gamma_s * gh.w[j1] * gh.w[j2]);
          g.antipode.push_back((sn.antipode[i] * fo + (fo - 1 - j1)) * fo +
                               (fo - 1 - j2));
        }
    }
  }
  return g;
}

QuadratureGrid StripSurface::grid(int resolution) const {
  require_resolution(resolution);
  const int flats = d - 1;
  if (flats > 2) fail_pre("UnsupportedSurface", "strip grids cover ambient d <= 3");
  QuadratureGrid g;
  g.ambient = d;
  const double gamma_1 = std::exp(-0.5 * t * t) / std::sqrt(2.0 * kPi);

  auto side_point = [&](int side, const std::vector<double>& flat) {
    CurvaturePoint p;
    p.x.assign(d, 0.0);
    p.N.assign(d, 0.0);
    p.x[0] = side > 0 ? t : -t;
    p.N[0] = side > 0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < flat.size(); ++i) p.x[1 + i] = flat[i];
    p.principal.assign(d - 1, 0.0);
    p.frame.assign(d - 1, Vec(d, 0.0));
    for (int i = 0; i < d - 1; ++i) p.frame[i][i + 1] = 1.0;
    return p;
  };

  if (flats == 0) {
    g.pts = {side_point(+1, {}), side_point(-1, {})};
    g.w = {gamma_1, gamma_1};
    g.antipode = {1, 0};
    return g;
  }
  int fo = (flats == 1)
               ? std::min(64, std::max(8, resolution / 2))
               : std::min(32, std::max(8, static_cast<int>(std::lround(
                                              std::sqrt(resolution / 2.0)))));
  g.flat_dims = flats;
  g.flat_order = fo;
  num::Rule1D gh = num::gauss_hermite(fo);
  for (int s = 0; s < 2; ++s) {
    int side = s == 0 ? +1 : -1;
    int sa = 1 - s;  // antipodal side index
    if (flats == 1) {
      for (int j = 0; j < fo; ++j) {
        g.pts.push_back(side_point(side, {gh.x[j]}));
        g.w.push_back(gamma_1 * gh.w[j]);
        g.antipode.push_back(sa * fo + (fo - 1 - j));
      }
    } else {
      for (int j1 = 0; j1 < fo; ++j1)
        for (int j2 = 0; j2 < fo; ++j2) {
          g.pts.push_back(side_point(side, {gh.x[j1], gh.x[j2]}));
          g.w.push_back(gamma_1 * gh.w[j1] * gh.w[j2]);
          g.antipode.push_back((sa * fo + (fo - 1 - j1)) * fo + (fo - 1 - j2));
        }
    }
  }
  return g;
}

QuadratureGrid EllipsoidSurface::grid(int resolution) const {
  require_resolution(resolution);
  QuadratureGrid g;
  g.ambient = ambient();
  if (ambient() == 2) {
    const double a = semi[0], b = semi[1];
    int m = make_even(resolution);
    g.pts.reserve(m);
    double s = 0.0;
    for (int j = 0; j < m; ++j) {
      double th = 2.0 * kPi * j / m;
      CurvaturePoint p = detail::ellipse_point(a, b, th);
      double speed = std::sqrt(a * a * std::sin(th) * std::sin(th) +
                               b * b * std::cos(th) * std::cos(th));
      g.w.push_back(speed * (2.0 * kPi / m) * gauss_density(p.x));
      g.antipode.push_back((j + m / 2) % m);
      g.adjacency.push_back({(j + m - 1) % m, (j + 1) % m});
      g.arc.push_back(s);
      s += speed * 2.0 * kPi / m;
      g.pts.push_back(std::move(p));
    }
    g.length = s;
    return g;
  }
  const double a = semi[0], b = semi[1], c = semi[2];
  int mu = std::max(4, make_even(static_cast<int>(std::lround(std::sqrt(resolution / 2.0)))));
  int mt = 2 * mu;
  num::Rule1D gl = num::gauss_legendre(mu);
  g.adjacency.resize(mu * mt);
  for (int ia = 0; ia < mu; ++ia) {
    double u = gl.x[ia], su = std::sqrt(1.0 - u * u);
    for (int j = 0; j < mt; ++j) {
      double th = 2.0 * kPi * j / mt;
      CurvaturePoint p = detail::ellipsoid3_point(a, b, c, u, th);
      double cx = b * c * su * std::cos(th);
      double cy = a * c * su * std::sin(th);
      double cz = a * b * u;
      double area = std::sqrt(cx * cx + cy * cy + cz * cz);
      g.w.push_back(area * gl.w[ia] * (2.0 * kPi / mt) * gauss_density(p.x));
      g.antipode.push_back((mu - 1 - ia) * mt + (j + mt / 2) % mt);
      int idx = ia * mt + j;
      auto& nb = g.adjacency[idx];
      nb.push_back(ia * mt + (j + 1) % mt);
      nb.push_back(ia * mt + (j + mt - 1) % mt);
      if (ia > 0) nb.push_back((ia - 1) * mt + j);
      if (ia + 1 < mu) nb.push_back((ia + 1) * mt + j);
      g.pts.push_back(std::move(p));
    }
  }
  return g;
}

QuadratureGrid CurveSurface::grid(int resolution) const {
  require_resolution(std::min(resolution, node_count()));
  const int m = node_count();
  QuadratureGrid g;
  g.ambient = 2;
  g.pts.reserve(m);
  for (int i = 0; i < m; ++i) {
    CurvaturePoint p = detail::curve_node_data(nodes_, i);
    double hm = (i > 0) ? arc_[i] - arc_[i - 1] : length_ - arc_[m - 1];
    double hp = (i + 1 < m) ? arc_[i + 1] - arc_[i] : length_ - arc_[m - 1];
    g.w.push_back(0.5 * (hm + hp) * gauss_density(p.x));
    g.adjacency.push_back({(i + m - 1) % m, (i + 1) % m});
    g.pts.push_back(std::move(p));
  }
  if (symmetric_)
    for (int i = 0; i < m; ++i) g.antipode.push_back((i + m / 2) % m);
  g.arc = arc_;
  g.length = length_;
  return g;
}

QuadratureGrid RevolutionSurface::grid(int resolution) const {
  require_resolution(resolution);
  const int pn = static_cast<int>(profile_.size());
  if (pn < 8) fail_pre("ResolutionTooLow", "revolution profile needs >= 8 nodes");
  int mt = make_even(std::max(8, resolution / pn));

  // antipodal pairing of profile nodes under z -> -z, when present
  std::vector<int> reflect(pn, -1);
  if (symmetric_) {
    double scale = 1.0;
    for (const auto& p : profile_) scale = std::max({scale, p[0], std::fabs(p[1])});
    for (int i = 0; i < pn; ++i) {
      double best = 1e300;
      for (int j = 0; j < pn; ++j) {
        double dd = std::hypot(profile_[j][0] - profile_[i][0],
                               profile_[j][1] + profile_[i][1]);
        if (dd < best) {
          best = dd;
          reflect[i] = j;
        }
      }
      if (best > 1e-6 * scale) reflect[i] = -1;
    }
  }

  QuadratureGrid g;
  g.ambient = 3;
  g.adjacency.resize(pn * mt);
  for (int i = 0; i < pn; ++i) {
    double hm = (i > 0) ? arc_[i] - arc_[i - 1] : length_ - arc_[pn - 1];
    double hp = (i + 1 < pn) ? arc_[i + 1] - arc_[i] : length_ - arc_[pn - 1];
    double ds = 0.5 * (hm + hp);
    for (int j = 0; j < mt; ++j) {
      double th = 2.0 * kPi * j / mt;
      CurvaturePoint p = detail::revolution_point(profile_, i, th);
      g.w.push_back(profile_[i][0] * ds * (2.0 * kPi / mt) * gauss_density(p.x));
      if (symmetric_ && reflect[i] >= 0)
        g.antipode.push_back(reflect[i] * mt + (j + mt / 2) % mt);
      int idx = i * mt + j;
      auto& nb = g.adjacency[idx];
      nb.push_back(i * mt + (j + 1) % mt);
      nb.push_back(i * mt + (j + mt - 1) % mt);
      nb.push_back(((i + 1) % pn) * mt + j);
      nb.push_back(((i + pn - 1) % pn) * mt + j);
      g.pts.push_back(std::move(p));
    }
  }
  if (static_cast<int>(g.antipode.size()) != g.size()) g.antipode.clear();
  return g;
}

}  // namespace gslab
