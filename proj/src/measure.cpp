#include "gslab/measure.hpp"

#include <cmath>

#include "gslab/errors.hpp"
#include "gslab/roots.hpp"
#include "gslab/special.hpp"

namespace gslab {

double ball_volume(int d, double r) {
  if (d < 1) fail_pre("BadDimension", "ball_volume: d >= 1 required");
  if (r <= 0.0) return 0.0;
  return gamma_p(0.5 * d, 0.5 * r * r);
}

double sphere_area(double r, int n) {
  if (n < 0) fail_pre("BadDimension", "sphere_area: n >= 0 required");
  const int d = n + 1;
  return unit_sphere_area(n) * std::pow(r, n) *
         std::pow(2.0 * M_PI, -0.5 * d) * std::exp(-0.5 * r * r);
}

double cylinder_volume(double r, int k) {
  if (k < 0) fail_pre("BadDimension", "cylinder_volume: k >= 0 required");
  if (r <= 0.0) return 0.0;
  return gamma_p(0.5 * (k + 1), 0.5 * r * r);
}

double cylinder_area(double r, int k) {
  // Flat directions integrate to 1 against the Gaussian factors, leaving the
  // sphere factor's weighted area.
  return sphere_area(r, k);
}

double slab_volume(double t) {
  if (t <= 0.0) return 0.0;
  return std::erf(t / std::sqrt(2.0));
}

double strip_area(double t) { return 2.0 * norm_pdf(t); }

double flux_volume(const QuadratureGrid& g) {
  const int d = g.ambient;
  if (d < 2) fail_pre("BadDimension", "flux_volume: ambient >= 2 required");
  // F(x) = f(|x|) x/|x| with div F = gamma solves
  //   f(rho) = rho^{1-d} int_0^rho t^{d-1} gamma(t) dt,
  // so the enclosed Gaussian volume equals the outward flux of F.
  const double front =
      std::pow(2.0 * M_PI, -0.5 * d) * std::pow(2.0, 0.5 * d - 1.0) *
      std::tgamma(0.5 * d);
  double vol = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const CurvaturePoint& p = g.pts[i];
    const double rho = norm(p.x);
    if (rho < 1e-14) continue;
    const double f =
        front * gamma_p(0.5 * d, 0.5 * rho * rho) / std::pow(rho, d - 1);
    const double ds = g.w[i] / gauss_density(p.x);
    vol += ds * f * dot(p.x, p.N) / rho;
  }
  return vol;
}

double gaussian_perimeter(const Surface& s, int resolution) {
  const std::string kind = s.kind();
  if (kind == "sphere") {
    const auto& sp = static_cast<const SphereSurface&>(s);
    return sphere_area(sp.r, sp.n);
  }
  if (kind == "cylinder") {
    const auto& cy = static_cast<const CylinderSurface&>(s);
    return cylinder_area(cy.r, cy.k);
  }
  if (kind == "strip") {
    const auto& st = static_cast<const StripSurface&>(s);
    return strip_area(st.t);
  }
  return s.grid(resolution).total();
}

double gaussian_volume(const Surface& s, int resolution) {
  const std::string kind = s.kind();
  if (kind == "sphere") {
    const auto& sp = static_cast<const SphereSurface&>(s);
    return ball_volume(sp.ambient(), sp.r);
  }
  if (kind == "cylinder") {
    const auto& cy = static_cast<const CylinderSurface&>(s);
    return cylinder_volume(cy.r, cy.k);
  }
  if (kind == "strip") {
    const auto& st = static_cast<const StripSurface&>(s);
    return slab_volume(st.t);
  }
  if (!s.closed())
    fail_pre("UnboundedRegionWithoutClosedForm",
             "gaussian_volume: no closed form and the surface does not "
             "bound a compact region");
  return flux_volume(s.grid(resolution));
}

namespace {

double solve_scale(double c, double (*vol)(int, double), int param,
                   const char* what) {
  if (!(c > 0.0 && c < 1.0))
    fail_pre("NoBracket", std::string(what) + ": volume must lie in (0,1)");
  double lo = 1e-8, hi = 1.0;
  int grow = 0;
  while (vol(param, hi) < c) {
    hi *= 2.0;
    if (++grow > 60) fail_pre("NoBracket", std::string(what) + ": no bracket");
  }
  grow = 0;
  while (vol(param, lo) > c) {
    lo *= 0.125;
    if (++grow > 60) fail_pre("NoBracket", std::string(what) + ": no bracket");
  }
  auto f = [&](double r) { return vol(param, r) - c; };
  RootResult res = find_root(f, lo, hi, 1e-15 * hi, 1e-13);
  return res.x;
}

double slab_vol_adapter(int, double t) { return slab_volume(t); }
double cyl_vol_adapter(int k, double r) { return cylinder_volume(r, k); }

}  // namespace

double ball_radius_for_volume(int d, double c) {
  if (d < 1) fail_pre("BadDimension", "ball_radius_for_volume: d >= 1");
  return solve_scale(c, &ball_volume, d, "ball_radius_for_volume");
}

double cylinder_radius_for_volume(int k, double c) {
  if (k < 0) fail_pre("BadDimension", "cylinder_radius_for_volume: k >= 0");
  return solve_scale(c, &cyl_vol_adapter, k, "cylinder_radius_for_volume");
}

double slab_halfwidth_for_volume(double c) {
  return solve_scale(c, &slab_vol_adapter, 0, "slab_halfwidth_for_volume");
}

std::vector<TableRow> ball_table(const std::vector<int>& ns,
                                 const std::vector<double>& cs) {
  std::vector<TableRow> rows;
  rows.reserve(ns.size() * cs.size());
  for (int n : ns) {
    for (double c : cs) {
      TableRow row;
      row.n = n;
      row.c = c;
      row.r = ball_radius_for_volume(n, c);
      row.perimeter = sphere_area(row.r, n - 1);
      rows.push_back(row);
    }
  }
  return rows;
}

BallExpansion ball_expansion(int n, double s) {
  if (n < 1) fail_pre("BadDimension", "ball_expansion: n >= 1 required");
  BallExpansion out;
  const double r2 = n + s * std::sqrt(2.0 * n);
  out.exact = (r2 <= 0.0) ? 0.0 : gamma_p(0.5 * n, 0.5 * r2);
  // Normal limit of the chi^2_n tail with its first Edgeworth correction:
  // the standardized variable has skewness sqrt(8/n), giving the
  // (sqrt 2/3)(1-s^2) phi(s)/sqrt(n) term.
  out.approx = norm_cdf(s) +
               std::sqrt(2.0) / 3.0 * (1.0 - s * s) * norm_pdf(s) /
                   std::sqrt(static_cast<double>(n));
  return out;
}

}  // namespace gslab
