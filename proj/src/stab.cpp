#include "gslab/stab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "gslab/errors.hpp"
#include "gslab/tridiag.hpp"

namespace gslab {

namespace {

// ---- closed 1-d chains ------------------------------------------------

struct Chain {
  int M = 0;
  std::vector<double> h;  // h[i] joins node i to i+1 mod M
};

bool has_chain(const QuadratureGrid& g) {
  return static_cast<int>(g.arc.size()) == g.size() && g.length > 0.0 &&
         g.size() >= 8;
}

Chain chain_of(const QuadratureGrid& g) {
  if (!has_chain(g))
    fail_pre("UnsupportedSurface", "operation needs a closed 1-d chain grid");
  Chain c;
  c.M = g.size();
  c.h.resize(c.M);
  for (int i = 0; i < c.M; ++i) {
    c.h[i] = (i + 1 < c.M) ? g.arc[i + 1] - g.arc[i]
                           : g.length - g.arc[c.M - 1] + g.arc[0];
    if (!(c.h[i] > 0.0))
      fail_pre("UnsupportedSurface", "chain arclength table is not increasing");
  }
  return c;
}

// First and second arclength derivatives along the chain; five-point fourth
// order where the spacing is locally uniform, three-point otherwise.
void chain_derivs(const Chain& c, const Vec& f, Vec& fs, Vec& fss) {
  const int M = c.M;
  fs.assign(M, 0.0);
  fss.assign(M, 0.0);
  for (int i = 0; i < M; ++i) {
    const double hm = c.h[(i + M - 1) % M];
    const double hp = c.h[i];
    const double hm2 = c.h[(i + M - 2) % M];
    const double hp2 = c.h[(i + 1) % M];
    const double fm = f[(i + M - 1) % M], f0 = f[i], fp = f[(i + 1) % M];
    const double h = 0.25 * (hm2 + hm + hp + hp2);
    const double skew = std::max({std::fabs(hm2 - h), std::fabs(hm - h),
                                  std::fabs(hp - h), std::fabs(hp2 - h)});
    if (skew <= 1e-6 * h) {
      const double fm2 = f[(i + M - 2) % M], fp2 = f[(i + 2) % M];
      fs[i] = (fm2 - 8.0 * fm + 8.0 * fp - fp2) / (12.0 * h);
      fss[i] = (-fm2 + 16.0 * fm - 30.0 * f0 + 16.0 * fp - fp2) /
               (12.0 * h * h);
    } else {
      fs[i] = (hm * hm * fp - hp * hp * fm + (hp * hp - hm * hm) * f0) /
              (hm * hp * (hm + hp));
      fss[i] = 2.0 * (hm * fp + hp * fm - (hm + hp) * f0) /
               (hm * hp * (hm + hp));
    }
  }
}

Vec chain_drift_laplacian(const QuadratureGrid& g, const Vec& f) {
  Chain c = chain_of(g);
  Vec fs, fss;
  chain_derivs(c, f, fs, fss);
  Vec out(c.M);
  for (int i = 0; i < c.M; ++i) {
    const CurvaturePoint& p = g.pts[i];
    out[i] = fss[i] - fs[i] * dot(p.x, p.frame[0]);
  }
  return out;
}

// ---- product-grid structure -------------------------------------------

// Dimension of the compact sphere factor of a product grid (n for spheres,
// k for cylinders, 0 for strips).
int factor_dim(const QuadratureGrid& g) { return g.ambient - g.flat_dims - 1; }

double factor_radius(const QuadratureGrid& g) {
  const int kf = factor_dim(g);
  double r2 = 0.0;
  for (int j = 0; j <= kf; ++j) r2 += g.pts[0].x[j] * g.pts[0].x[j];
  return std::sqrt(r2);
}

bool constant_factor_radius(const QuadratureGrid& g, double r) {
  const int kf = factor_dim(g);
  for (const CurvaturePoint& p : g.pts) {
    double r2 = 0.0;
    for (int j = 0; j <= kf; ++j) r2 += p.x[j] * p.x[j];
    if (std::fabs(std::sqrt(r2) - r) > 1e-9 * (1.0 + r)) return false;
  }
  return true;
}

Vec harmonic_drift_laplacian(const QuadratureGrid& g, const Vec& f, int l) {
  const int kf = factor_dim(g);
  if (l == 0) return Vec(g.size(), 0.0);
  if (kf < 1)
    fail_pre("UnsupportedSurface",
             "harmonic-degree action needs a sphere factor of dimension >= 1");
  const double r = factor_radius(g);
  if (!constant_factor_radius(g, r))
    fail_pre("UnsupportedSurface",
             "harmonic-degree action needs a round sphere factor");
  const double mu = -static_cast<double>(l) * (l + kf - 1) / (r * r);
  Vec out(f);
  for (double& v : out) v *= mu;
  return out;
}

// Hermite expansion of the operator along the single flat direction of a
// flat-sheet grid (strips), sheet by sheet. Probabilists' polynomials
// He_m are eigenfunctions of the one-dimensional drift Laplacian with
// eigenvalue -m, and the natural Gauss-Hermite weights make the expansion
// exact on polynomials that the rule resolves.
Vec hermite_drift_laplacian(const QuadratureGrid& g, const Vec& f) {
  const int fo = g.flat_order;
  const int blocks = g.size() / fo;
  const int yidx = g.ambient - 1;
  Vec out(g.size(), 0.0);
  std::vector<double> y(fo), wnat(fo), he0(fo), he1(fo), he2(fo);
  for (int b = 0; b < blocks; ++b) {
    const int base = b * fo;
    double wsum = 0.0;
    for (int j = 0; j < fo; ++j) {
      y[j] = g.pts[base + j].x[yidx];
      wnat[j] = g.w[base + j];
      wsum += wnat[j];
    }
    for (int j = 0; j < fo; ++j) wnat[j] /= wsum;
    // accumulate sum_m (-m) c_m He_m(y), c_m = (1/m!) sum_j w_j f_j He_m(y_j)
    std::fill(he0.begin(), he0.end(), 1.0);
    for (int j = 0; j < fo; ++j) he1[j] = y[j];
    double mfact = 1.0;
    for (int m = 1; m < fo; ++m) {
      mfact *= m;
      double cm = 0.0;
      for (int j = 0; j < fo; ++j) cm += wnat[j] * f[base + j] * he1[j];
      cm /= mfact;
      for (int j = 0; j < fo; ++j) out[base + j] += -m * cm * he1[j];
      for (int j = 0; j < fo; ++j) {
        he2[j] = y[j] * he1[j] - m * he0[j];
      }
      he0.swap(he1);
      he1.swap(he2);
    }
  }
  return out;
}

bool flat_sheet_grid(const QuadratureGrid& g) {
  if (g.flat_dims != 1 || g.flat_order <= 0) return false;
  if (g.size() % g.flat_order != 0) return false;
  for (const CurvaturePoint& p : g.pts)
    if (p.A2 > 1e-12) return false;
  return true;
}

}  // namespace

Vec apply_drift_laplacian(const QuadratureGrid& g, const Vec& f,
                          const OperatorOptions& opt) {
  if (static_cast<int>(f.size()) != g.size())
    fail_pre("FieldSizeMismatch", "sample length differs from grid size");
  if (opt.harmonic_degree >= 0)
    return harmonic_drift_laplacian(g, f, opt.harmonic_degree);
  if (has_chain(g)) return chain_drift_laplacian(g, f);
  if (flat_sheet_grid(g)) return hermite_drift_laplacian(g, f);
  fail_pre("UnsupportedSurface",
           "drift Laplacian needs a chain grid, a flat-sheet grid, or a "
           "harmonic-degree hint on a sphere factor");
}

Vec apply_L(const QuadratureGrid& g, const Vec& f, const OperatorOptions& opt) {
  Vec out = apply_drift_laplacian(g, f, opt);
  for (int i = 0; i < g.size(); ++i) out[i] += (g.pts[i].A2 + 1.0) * f[i];
  return out;
}

std::vector<SphereMode> sphere_spectrum(int n, double r, int max_degree) {
  if (n < 1) fail_pre("BadDimension", "sphere_spectrum: n >= 1 required");
  if (!(r > 0.0)) fail_pre("NonPositiveRadius", "sphere_spectrum: r > 0");
  if (max_degree < 0) fail_pre("BadDegree", "sphere_spectrum: max_degree >= 0");
  std::vector<SphereMode> modes;
  modes.reserve(max_degree + 1);
  for (int l = 0; l <= max_degree; ++l) {
    SphereMode m;
    m.degree = l;
    m.eigenvalue =
        1.0 + (n - static_cast<double>(l) * (l + n - 1)) / (r * r);
    if (l == 0) {
      m.multiplicity = 1.0;
    } else if (n == 1) {
      m.multiplicity = 2.0;
    } else {
      // (2l+n-1)/(l+n-1) * C(l+n-1, l)
      long double binom = 1.0L;
      for (int j = 1; j <= l; ++j)
        binom *= static_cast<long double>(n - 1 + j) / j;
      m.multiplicity = static_cast<double>(
          std::llround(binom * (2.0L * l + n - 1) / (l + n - 1)));
    }
    modes.push_back(m);
  }
  return modes;
}

ProfileSpectrum chain_spectrum(const std::vector<double>& node_weight,
                               const std::vector<double>& edge_length,
                               const std::vector<double>& potential, int count,
                               bool want_function) {
  const int M = static_cast<int>(node_weight.size());
  if (M < 8 || edge_length.size() != node_weight.size() ||
      potential.size() != node_weight.size())
    fail_pre("ResolutionTooLow", "chain spectrum needs >= 8 matching nodes");
  if (count < 1 || count > M / 4)
    fail_pre("ResolutionTooLow",
             "eigenvalue count must lie in [1, chain size / 4]");
  std::vector<double> dens(M), cond(M), diag(M), off(M);
  for (int i = 0; i < M; ++i) {
    const double ds = 0.5 * (edge_length[(i + M - 1) % M] + edge_length[i]);
    if (!(node_weight[i] > 0.0) || !(edge_length[i] > 0.0))
      fail_pre("ResolutionTooLow", "chain weights and edges must be positive");
    dens[i] = node_weight[i] / ds;
  }
  for (int i = 0; i < M; ++i)
    cond[i] = std::sqrt(dens[i] * dens[(i + 1) % M]) / edge_length[i];
  for (int i = 0; i < M; ++i) {
    diag[i] = potential[i] -
              (cond[(i + M - 1) % M] + cond[i]) / node_weight[i];
    off[i] = cond[i] / std::sqrt(node_weight[i] * node_weight[(i + 1) % M]);
  }
  num::Matrix a(M, std::vector<double>(M, 0.0));
  for (int i = 0; i < M; ++i) {
    a[i][i] = diag[i];
    const int j = (i + 1) % M;
    a[i][j] = off[i];
    a[j][i] = off[i];
  }
  num::EigenResult er = num::eigen_symmetric(std::move(a), false);

  ProfileSpectrum out;
  out.chain_size = M;
  out.values.reserve(count);
  for (int i = 0; i < count; ++i) out.values.push_back(er.values[M - 1 - i]);
  if (want_function) {
    // Top eigenfunction of the weighted operator: unsymmetrize the inverse
    // iteration result and normalize it positive with sup-norm one.
    std::vector<double> u = num::cyclic_eigenvector(diag, off, out.values[0]);
    out.top_function.resize(M);
    double mean = 0.0, amax = 0.0;
    for (int i = 0; i < M; ++i) {
      out.top_function[i] = u[i] / std::sqrt(node_weight[i]);
      mean += out.top_function[i] * node_weight[i];
    }
    if (mean < 0.0)
      for (double& v : out.top_function) v = -v;
    for (double v : out.top_function) amax = std::max(amax, std::fabs(v));
    if (amax > 0.0)
      for (double& v : out.top_function) v /= amax;
  }
  return out;
}

namespace {

ProfileSpectrum grid_chain_spectrum(const QuadratureGrid& g, int count,
                                    bool want_function) {
  Chain c = chain_of(g);
  std::vector<double> pot(c.M);
  for (int i = 0; i < c.M; ++i) pot[i] = g.pts[i].A2 + 1.0;
  return chain_spectrum(g.w, c.h, pot, count, want_function);
}

}  // namespace

ProfileSpectrum profile_spectrum(const Surface& s, int resolution, int count,
                                 bool want_function) {
  const std::string kind = s.kind();
  if (kind == "curve" || (kind == "ellipsoid" && s.ambient() == 2) ||
      (kind == "sphere" && s.ambient() == 2)) {
    return grid_chain_spectrum(s.grid(resolution), count, want_function);
  }
  if (kind == "revolution") {
    const auto& rev = static_cast<const RevolutionSurface&>(s);
    const auto& arcs = rev.arcs();
    const int P = static_cast<int>(arcs.size());
    std::vector<double> w(P), h(P), pot(P);
    for (int i = 0; i < P; ++i)
      h[i] = (i + 1 < P) ? arcs[i + 1] - arcs[i]
                         : rev.total_length() - arcs[P - 1] + arcs[0];
    for (int i = 0; i < P; ++i) {
      CurvaturePoint p = rev.at({arcs[i], 0.0});
      const double rho = rev.profile()[i][0];
      const double ds = 0.5 * (h[(i + P - 1) % P] + h[i]);
      w[i] = 2.0 * M_PI * rho * ds * gauss_density(p.x);
      pot[i] = p.A2 + 1.0;
    }
    // Axisymmetric restriction of L: the meridian chain weighted by the
    // parallel circumference.
    return chain_spectrum(w, h, pot, count, want_function);
  }
  fail_pre("UnsupportedSurface",
           "profile spectrum needs a curve or a revolution surface");
}

std::vector<SpectrumLine> group_spectrum(const std::vector<double>& values,
                                         double tol) {
  std::vector<SpectrumLine> lines;
  std::size_t i = 0;
  int idx = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && std::fabs(values[j] - values[i]) <= tol) {
      sum += values[j];
      ++j;
    }
    lines.push_back({idx++, sum / static_cast<double>(j - i),
                     static_cast<int>(j - i)});
    i = j;
  }
  return lines;
}

// ---- identity verification --------------------------------------------

namespace {

struct Residual {
  double mx = 0.0;
  double num = 0.0;
  double den = 0.0;
  void add(double r, double w) {
    mx = std::max(mx, std::fabs(r));
    num += w * r * r;
    den += w;
  }
  double l2() const { return den > 0.0 ? std::sqrt(num / den) : 0.0; }
};

struct IdCtx {
  const Surface* s;
  const QuadratureGrid* g;
  double lambda;
  std::string kind;
  int dimn;   // surface dimension n
  bool hom;   // sphere / cylinder / strip: constant curvature data
  int kf;     // sphere-factor dimension (hom only)
  double r;   // sphere-factor radius (hom only, unused for strips)
};

double flat_norm2(const IdCtx& c, const Vec& x) {
  double s = 0.0;
  for (int j = c.kf + 1; j < static_cast<int>(x.size()); ++j) s += x[j] * x[j];
  return s;
}

// calL of the restriction of the coordinate function N_j (degree-1 sphere
// harmonic on the compact factor, zero on flats).
double hom_lcal_normal(const IdCtx& c, double f) {
  return c.kf > 0 ? -(c.kf / (c.r * c.r)) * f : 0.0;
}

void pointwise_LH(const IdCtx& c, Residual& acc) {
  if (c.hom) {
    for (int i = 0; i < c.g->size(); ++i) {
      const CurvaturePoint& p = c.g->pts[i];
      const double lh = (p.A2 + 1.0) * p.H;  // H constant, calL H = 0
      acc.add(lh - 2.0 * p.H - c.lambda * p.A2, c.g->w[i]);
    }
    return;
  }
  Vec hvals(c.g->size());
  for (int i = 0; i < c.g->size(); ++i) hvals[i] = c.g->pts[i].H;
  Vec lh = apply_L(*c.g, hvals);
  for (int i = 0; i < c.g->size(); ++i)
    acc.add(lh[i] - 2.0 * hvals[i] - c.lambda * c.g->pts[i].A2, c.g->w[i]);
}

void pointwise_LA(const IdCtx& c, Residual& acc) {
  if (c.hom) {
    for (int i = 0; i < c.g->size(); ++i) {
      const CurvaturePoint& p = c.g->pts[i];
      for (double a : p.principal)
        acc.add((p.A2 + 1.0) * a - 2.0 * a + c.lambda * a * a, c.g->w[i]);
    }
    return;
  }
  Vec avals(c.g->size());
  for (int i = 0; i < c.g->size(); ++i) avals[i] = c.g->pts[i].principal[0];
  Vec la = apply_L(*c.g, avals);
  for (int i = 0; i < c.g->size(); ++i)
    acc.add(la[i] - 2.0 * avals[i] + c.lambda * avals[i] * avals[i],
            c.g->w[i]);
}

void pointwise_LINEAR(const IdCtx& c, Residual& acc) {
  const int d = c.g->ambient;
  if (c.hom) {
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < c.g->size(); ++i) {
        const CurvaturePoint& p = c.g->pts[i];
        const double f = p.N[j];
        acc.add(hom_lcal_normal(c, f) + (p.A2 + 1.0) * f - f, c.g->w[i]);
      }
    return;
  }
  for (int j = 0; j < d; ++j) {
    Vec f(c.g->size());
    for (int i = 0; i < c.g->size(); ++i) f[i] = c.g->pts[i].N[j];
    Vec lf = apply_L(*c.g, f);
    for (int i = 0; i < c.g->size(); ++i) acc.add(lf[i] - f[i], c.g->w[i]);
  }
}

void pointwise_ROTATION(const IdCtx& c, Residual& acc) {
  const int d = c.g->ambient;
  for (int al = 0; al < d; ++al)
    for (int be = al + 1; be < d; ++be) {
      if (c.hom) {
        for (int i = 0; i < c.g->size(); ++i) {
          const CurvaturePoint& p = c.g->pts[i];
          const double f = p.x[be] * p.N[al] - p.x[al] * p.N[be];
          double lcal;
          if (be <= c.kf) {
            lcal = 0.0;  // both directions in the factor: f vanishes
          } else if (al <= c.kf) {
            // factor harmonic times a flat coordinate
            const double kcoef = c.kf > 0 ? c.kf / (c.r * c.r) : 0.0;
            lcal = -(kcoef + 1.0) * f;
          } else {
            lcal = 0.0;  // both flat: N components vanish
          }
          acc.add(lcal + (p.A2 + 1.0) * f, c.g->w[i]);
        }
      } else {
        Vec f(c.g->size());
        for (int i = 0; i < c.g->size(); ++i) {
          const CurvaturePoint& p = c.g->pts[i];
          f[i] = p.x[be] * p.N[al] - p.x[al] * p.N[be];
        }
        Vec lf = apply_L(*c.g, f);
        for (int i = 0; i < c.g->size(); ++i) acc.add(lf[i], c.g->w[i]);
      }
    }
}

void pointwise_PRODUCT(const IdCtx& c, Residual& acc) {
  if (!c.hom) {
    // coordinate pair on a chain, everything by finite differences
    Chain ch = chain_of(*c.g);
    const int M = ch.M;
    Vec f(M), gg(M), fg(M);
    for (int i = 0; i < M; ++i) {
      f[i] = c.g->pts[i].x[0];
      gg[i] = c.g->pts[i].x[1];
      fg[i] = f[i] * gg[i];
    }
    Vec lf = apply_L(*c.g, f), lg = apply_L(*c.g, gg), lfg = apply_L(*c.g, fg);
    Vec fs, fss, gs, gss;
    chain_derivs(ch, f, fs, fss);
    chain_derivs(ch, gg, gs, gss);
    for (int i = 0; i < M; ++i) {
      const double a2 = c.g->pts[i].A2;
      acc.add(lfg[i] - f[i] * lg[i] - gg[i] * lf[i] - 2.0 * fs[i] * gs[i] +
                  (a2 + 1.0) * fg[i],
              c.g->w[i]);
    }
    return;
  }
  if (c.kf >= 1) {
    // f = <e0,N>, g = <e1,N>: two degree-1 factor harmonics
    const double r2 = c.r * c.r;
    for (int i = 0; i < c.g->size(); ++i) {
      const CurvaturePoint& p = c.g->pts[i];
      const double f = p.N[0], gg = p.N[1], fg = f * gg;
      const double lcal_fg = -2.0 * (c.kf + 1) * fg / r2;
      const double lfg = lcal_fg + (p.A2 + 1.0) * fg;
      const double lf = hom_lcal_normal(c, f) + (p.A2 + 1.0) * f;
      const double lg = hom_lcal_normal(c, gg) + (p.A2 + 1.0) * gg;
      const double gradfg = (0.0 - f * gg) / r2;  // <grad f, grad g>
      acc.add(lfg - f * lg - gg * lf - 2.0 * gradfg + (p.A2 + 1.0) * fg,
              c.g->w[i]);
    }
    return;
  }
  // flat-sheet families: f = g = first flat coordinate (Ornstein-Uhlenbeck)
  const int d = c.g->ambient;
  if (d < 2) {
    // two-point strip: constants only
    for (int i = 0; i < c.g->size(); ++i) {
      const CurvaturePoint& p = c.g->pts[i];
      const double f = p.N[0];
      const double lfg = p.A2 + 1.0;  // fg = 1
      const double lf = (p.A2 + 1.0) * f;
      acc.add(lfg - 2.0 * f * lf + (p.A2 + 1.0), c.g->w[i]);
    }
    return;
  }
  for (int i = 0; i < c.g->size(); ++i) {
    const CurvaturePoint& p = c.g->pts[i];
    const double y = p.x[c.kf + 1];
    const double lfg = (2.0 - 2.0 * y * y) + (p.A2 + 1.0) * y * y;
    const double lf = -y + (p.A2 + 1.0) * y;
    acc.add(lfg - 2.0 * y * lf - 2.0 + (p.A2 + 1.0) * y * y, c.g->w[i]);
  }
}

void pointwise_SIMONS(const IdCtx& c, Residual& acc) {
  if (c.hom) {
    for (int i = 0; i < c.g->size(); ++i) {
      const CurvaturePoint& p = c.g->pts[i];
      double a3 = 0.0;
      for (double a : p.principal) a3 += a * a * a;
      const double anorm = std::sqrt(p.A2);
      const double lhs = anorm * (p.A2 + 1.0) * anorm;
      acc.add(lhs - 2.0 * p.A2 + c.lambda * a3, c.g->w[i]);
    }
    return;
  }
  const int M = c.g->size();
  Vec kappa(M), anorm(M);
  double kmin = 1e300, kmax = -1e300;
  for (int i = 0; i < M; ++i) {
    kappa[i] = c.g->pts[i].principal[0];
    kmin = std::min(kmin, kappa[i]);
    kmax = std::max(kmax, kappa[i]);
    anorm[i] = std::fabs(kappa[i]);
  }
  if (kmin <= 0.0 && kmax >= 0.0)
    fail_pre("UnsupportedSurface",
             "SIMONS on curves needs curvature of constant sign");
  Vec la = apply_L(*c.g, anorm);
  for (int i = 0; i < M; ++i) {
    const double k = kappa[i];
    // gradient terms cancel exactly in one dimension
    acc.add(anorm[i] * la[i] - 2.0 * k * k + c.lambda * k * k * k,
            c.g->w[i]);
  }
}

void pointwise_SOLITON(const IdCtx& c, Residual& acc) {
  if (c.hom) {
    const int flats = c.g->flat_dims;
    for (int i = 0; i < c.g->size(); ++i) {
      const CurvaturePoint& p = c.g->pts[i];
      const double y2 = flat_norm2(c, p.x);
      const double lhs = flats - y2;  // (1/2) calL |x|^2
      const double rhs =
          c.dimn - dot(p.x, p.x) - c.lambda * dot(p.x, p.N);
      acc.add(lhs - rhs, c.g->w[i]);
    }
    return;
  }
  Vec x2(c.g->size());
  for (int i = 0; i < c.g->size(); ++i)
    x2[i] = dot(c.g->pts[i].x, c.g->pts[i].x);
  Vec lx2 = apply_drift_laplacian(*c.g, x2);
  for (int i = 0; i < c.g->size(); ++i) {
    const CurvaturePoint& p = c.g->pts[i];
    const double rhs = c.dimn - x2[i] - c.lambda * dot(p.x, p.N);
    acc.add(0.5 * lx2[i] - rhs, c.g->w[i]);
  }
}

double integral_defect(const IdCtx& c, const std::string& id) {
  double defect = 0.0;
  for (int i = 0; i < c.g->size(); ++i) {
    const CurvaturePoint& p = c.g->pts[i];
    const double x2 = dot(p.x, p.x);
    const double hl = p.H - c.lambda;
    double integrand = 0.0;
    if (id == "INT_X2") {
      integrand = c.dimn - x2 - c.lambda * p.H + c.lambda * c.lambda;
    } else if (id == "INT_X4") {
      integrand = (c.dimn + 2.0) * x2 - x2 * x2 - c.lambda * x2 * hl -
                  2.0 * hl * hl;
    } else {
      // INT_VAR
      const double dev = x2 - c.dimn;
      integrand = dev * dev - 2.0 * c.dimn -
                  hl * (-2.0 * p.H + c.lambda * (c.dimn - x2));
    }
    defect += c.g->w[i] * integrand;
  }
  return defect;
}

double ibp_defect(const IdCtx& c) {
  const int M = c.g->size();
  if (!c.hom) {
    Chain ch = chain_of(*c.g);
    Vec f(M), gg(M);
    for (int i = 0; i < M; ++i) {
      f[i] = c.g->pts[i].x[0];
      gg[i] = c.g->pts[i].x[1];
    }
    Vec lf = apply_drift_laplacian(*c.g, f);
    Vec lg = apply_drift_laplacian(*c.g, gg);
    Vec fs, fss, gs, gss;
    chain_derivs(ch, f, fs, fss);
    chain_derivs(ch, gg, gs, gss);
    double flf = 0.0, grad2 = 0.0, flg = 0.0, glf = 0.0;
    for (int i = 0; i < M; ++i) {
      flf += c.g->w[i] * f[i] * lf[i];
      grad2 += c.g->w[i] * fs[i] * fs[i];
      flg += c.g->w[i] * f[i] * lg[i];
      glf += c.g->w[i] * gg[i] * lf[i];
    }
    return std::max(std::fabs(flf + grad2), std::fabs(flg - glf));
  }
  if (c.kf >= 1) {
    const double r2 = c.r * c.r;
    double flf = 0.0, grad2 = 0.0, fg1 = 0.0, fg2 = 0.0;
    for (int i = 0; i < M; ++i) {
      const CurvaturePoint& p = c.g->pts[i];
      const double f = p.N[0];
      flf += c.g->w[i] * f * hom_lcal_normal(c, f);
      grad2 += c.g->w[i] * (1.0 - f * f) / r2;
      // symmetry pair: u = N0^2, v = N1^2 (degree-2 factor polynomials)
      const double u = p.N[0] * p.N[0], v = p.N[1] * p.N[1];
      const double lcal_u = 2.0 / r2 - 2.0 * (c.kf + 1) * u / r2;
      const double lcal_v = 2.0 / r2 - 2.0 * (c.kf + 1) * v / r2;
      fg1 += c.g->w[i] * u * lcal_v;
      fg2 += c.g->w[i] * v * lcal_u;
    }
    return std::max(std::fabs(flf + grad2), std::fabs(fg1 - fg2));
  }
  // strip-like: f = g = first flat coordinate
  if (c.g->ambient < 2) return 0.0;
  double flf = 0.0, grad2 = 0.0;
  for (int i = 0; i < M; ++i) {
    const double y = c.g->pts[i].x[c.kf + 1];
    flf += c.g->w[i] * y * (-y);
    grad2 += c.g->w[i];
  }
  return std::fabs(flf + grad2);
}

double rot_mean_defect(const IdCtx& c) {
  const int d = c.g->ambient;
  double worst = 0.0;
  for (int al = 0; al < d; ++al)
    for (int be = al + 1; be < d; ++be) {
      double v = 0.0;
      for (int i = 0; i < c.g->size(); ++i) {
        const CurvaturePoint& p = c.g->pts[i];
        v += c.g->w[i] * (p.x[be] * p.N[al] - p.x[al] * p.N[be]);
      }
      worst = std::max(worst, std::fabs(v));
    }
  return worst;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "LH",     "LA",     "LINEAR",     "ROTATION", "PRODUCT", "SIMONS",
      "SOLITON_X2", "INT_X2", "INT_X4", "INT_VAR",  "IBP",     "ROT_MEAN"};
  return names;
}

IdentityReport check_identity(const Surface& s, double lambda,
                              const std::string& id, int resolution) {
  const auto& names = identity_names();
  if (std::find(names.begin(), names.end(), id) == names.end())
    fail_usage("UnknownIdentity", "unknown identity id: " + id);

  QuadratureGrid g = s.grid(resolution);
  IdCtx c;
  c.s = &s;
  c.g = &g;
  c.lambda = lambda;
  c.kind = s.kind();
  c.dimn = s.dim();
  c.hom = (c.kind == "sphere" || c.kind == "cylinder" || c.kind == "strip");
  c.kf = 0;
  c.r = 0.0;
  if (c.kind == "sphere") {
    c.kf = c.dimn;
    c.r = static_cast<const SphereSurface&>(s).r;
  } else if (c.kind == "cylinder") {
    c.kf = static_cast<const CylinderSurface&>(s).k;
    c.r = static_cast<const CylinderSurface&>(s).r;
  }

  const bool needs_lambda = (id == "LH" || id == "LA" || id == "SIMONS" ||
                             id == "SOLITON_X2" || id == "INT_X2" ||
                             id == "INT_X4" || id == "INT_VAR");
  if (needs_lambda) {
    const double lr = lambda_residual(g, lambda);
    if (lr > 1e-6)
      fail_pre("NotLambdaSurface",
               "soliton defect " + std::to_string(lr) +
                   " exceeds 1e-6; the identity assumes H = <x,N> + lambda");
  }

  IdentityReport rep;
  rep.identity = id;
  rep.grid = g.size();

  Residual acc;
  if (id == "LH") {
    pointwise_LH(c, acc);
  } else if (id == "LA") {
    pointwise_LA(c, acc);
  } else if (id == "LINEAR") {
    pointwise_LINEAR(c, acc);
  } else if (id == "ROTATION") {
    pointwise_ROTATION(c, acc);
  } else if (id == "PRODUCT") {
    pointwise_PRODUCT(c, acc);
  } else if (id == "SIMONS") {
    pointwise_SIMONS(c, acc);
  } else if (id == "SOLITON_X2") {
    pointwise_SOLITON(c, acc);
  } else if (id == "INT_X2" || id == "INT_X4" || id == "INT_VAR") {
    const double d = integral_defect(c, id);
    rep.max_residual = std::fabs(d);
    rep.l2_residual = std::fabs(d);
    return rep;
  } else if (id == "IBP") {
    const double d = ibp_defect(c);
    rep.max_residual = d;
    rep.l2_residual = d;
    return rep;
  } else {
    const double d = rot_mean_defect(c);
    rep.max_residual = d;
    rep.l2_residual = d;
    return rep;
  }
  rep.max_residual = acc.mx;
  rep.l2_residual = acc.l2();
  return rep;
}

double rayleigh_delta(const QuadratureGrid& g,
                      const std::vector<FieldSamples>& trials) {
  if (trials.empty())
    fail_pre("DegenerateTrial", "rayleigh_delta needs at least one trial");
  double best = -1e300;
  for (const FieldSamples& t : trials) {
    if (static_cast<int>(t.values.size()) != g.size())
      fail_pre("FieldSizeMismatch", "trial sample length differs from grid");
    double den = 0.0, fmax = 0.0;
    for (int i = 0; i < g.size(); ++i) {
      den += g.w[i] * t.values[i] * t.values[i];
      fmax = std::max(fmax, std::fabs(t.values[i]));
    }
    if (den <= 1e-14 * (1.0 + fmax * fmax) * g.total())
      fail_pre("DegenerateTrial", "trial has vanishing weighted L2 norm");
    double num = 0.0;
    if (t.harmonic_degree >= 0) {
      OperatorOptions opt;
      opt.harmonic_degree = t.harmonic_degree;
      Vec lf = apply_L(g, t.values, opt);
      for (int i = 0; i < g.size(); ++i) num += g.w[i] * t.values[i] * lf[i];
    } else if (!t.grad.empty()) {
      if (t.grad.size() != t.values.size())
        fail_pre("FieldSizeMismatch", "gradient sample length differs");
      for (int i = 0; i < g.size(); ++i) {
        const double f = t.values[i];
        num += g.w[i] *
               ((g.pts[i].A2 + 1.0) * f * f - dot(t.grad[i], t.grad[i]));
      }
    } else {
      Vec lf = apply_L(g, t.values);
      for (int i = 0; i < g.size(); ++i) num += g.w[i] * t.values[i] * lf[i];
    }
    best = std::max(best, num / den);
  }
  if (has_chain(g))
    best = std::max(best, grid_chain_spectrum(g, 1, false).values[0]);
  return best;
}

}  // namespace gslab
