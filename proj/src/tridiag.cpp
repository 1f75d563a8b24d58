#include "gslab/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "gslab/errors.hpp"

namespace gslab::num {

namespace {

// Householder reduction of the symmetric matrix z to tridiagonal form.
// d receives the diagonal, e the subdiagonal (e[i] couples i-1 and i, e[0]=0).
// With want_vectors, z is overwritten by the accumulated orthogonal transform.
void tred2(Matrix& z, std::vector<double>& d, std::vector<double>& e, bool want_vectors) {
  const int n = static_cast<int>(z.size());
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (int i = n - 1; i > 0; --i) {
    int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k < i; ++k) scale += std::fabs(z[i][k]);
      if (scale == 0.0) {
        e[i] = z[i][l];
      } else {
        for (int k = 0; k < i; ++k) {
          z[i][k] /= scale;
          h += z[i][k] * z[i][k];
        }
        double f = z[i][l];
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        z[i][l] = f - g;
        f = 0.0;
        for (int j = 0; j < i; ++j) {
          if (want_vectors) z[j][i] = z[i][j] / h;
          g = 0.0;
          for (int k = 0; k < j + 1; ++k) g += z[j][k] * z[i][k];
          for (int k = j + 1; k < i; ++k) g += z[k][j] * z[i][k];
          e[j] = g / h;
          f += e[j] * z[i][j];
        }
        double hh = f / (h + h);
        for (int j = 0; j < i; ++j) {
          f = z[i][j];
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k < j + 1; ++k) z[j][k] -= f * e[k] + g * z[i][k];
        }
      }
    } else {
      e[i] = z[i][l];
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    if (want_vectors) {
      if (d[i] != 0.0) {
        for (int j = 0; j < i; ++j) {
          double g = 0.0;
          for (int k = 0; k < i; ++k) g += z[i][k] * z[k][j];
          for (int k = 0; k < i; ++k) z[k][j] -= g * z[k][i];
        }
      }
      d[i] = z[i][i];
      z[i][i] = 1.0;
      for (int j = 0; j < i; ++j) z[j][i] = z[i][j] = 0.0;
    } else {
      d[i] = z[i][i];
    }
  }
}

// QL iteration with implicit shifts on a symmetric tridiagonal matrix.
// On entry e[i] couples i-1 and i (e[0] unused); z holds the basis to rotate
// (identity or the tred2 transform). Eigenvalues land in d, eigenvector j in
// column j of z.
void tqli(std::vector<double>& d, std::vector<double>& e, Matrix& z, bool want_vectors) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          fail_tol("ConvergenceFailure", "QL iteration exceeded 50 sweeps for one eigenvalue");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          e[i + 1] = r = std::hypot(f, g);
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          d[i + 1] = g + (p = s * r);
          g = c * r - s * b;
          if (want_vectors) {
            for (int k = 0; k < n; ++k) {
              f = z[k][i + 1];
              z[k][i + 1] = s * z[k][i] + c * f;
              z[k][i] = c * z[k][i] - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

EigenResult finish(std::vector<double>& d, Matrix& z, bool want_vectors) {
  const int n = static_cast<int>(d.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });
  EigenResult out;
  out.values.resize(n);
  for (int j = 0; j < n; ++j) out.values[j] = d[order[j]];
  if (want_vectors) {
    out.vectors.assign(n, std::vector<double>(n));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out.vectors[j][k] = z[k][order[j]];
  }
  return out;
}

}  // namespace

EigenResult eigen_symmetric(Matrix a, bool want_vectors) {
  if (a.empty()) return {};
  std::vector<double> d, e;
  tred2(a, d, e, want_vectors);
  tqli(d, e, a, want_vectors);
  return finish(d, a, want_vectors);
}

EigenResult eigen_tridiagonal(std::vector<double> diag, std::vector<double> off,
                              bool want_vectors) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) return {};
  std::vector<double> e(n, 0.0);
  for (int i = 1; i < n; ++i) e[i] = off[i - 1];
  Matrix z;
  if (want_vectors) {
    z.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) z[i][i] = 1.0;
  } else {
    z.assign(1, std::vector<double>(1, 0.0));  // untouched placeholder
  }
  tqli(diag, e, z, want_vectors);
  return finish(diag, z, want_vectors);
}

std::vector<double> tridiag_solve(const std::vector<double>& a,
                                  const std::vector<double>& b,
                                  const std::vector<double>& c,
                                  std::vector<double> r) {
  const int n = static_cast<int>(b.size());
  constexpr double tiny = 1e-300;
  std::vector<double> gam(n), x(n);
  double bet = b[0];
  if (std::fabs(bet) < tiny) bet = std::copysign(tiny, bet == 0.0 ? 1.0 : bet);
  x[0] = r[0] / bet;
  for (int j = 1; j < n; ++j) {
    gam[j] = c[j - 1] / bet;
    bet = b[j] - a[j] * gam[j];
    if (std::fabs(bet) < tiny) bet = std::copysign(tiny, bet == 0.0 ? 1.0 : bet);
    x[j] = (r[j] - a[j] * x[j - 1]) / bet;
  }
  for (int j = n - 2; j >= 0; --j) x[j] -= gam[j + 1] * x[j + 1];
  return x;
}

std::vector<double> cyclic_tridiag_solve(const std::vector<double>& a,
                                         const std::vector<double>& b,
                                         const std::vector<double>& c,
                                         const std::vector<double>& r) {
  const int n = static_cast<int>(b.size());
  if (n < 3) fail_pre("SystemTooSmall", "cyclic solve needs at least 3 unknowns");
  const double alpha = c[n - 1];  // coupling of the last row to x[0]
  const double beta = a[0];       // coupling of the first row to x[n-1]
  const double gamma = -b[0];
  std::vector<double> bb(b);
  bb[0] = b[0] - gamma;
  bb[n - 1] = b[n - 1] - alpha * beta / gamma;
  std::vector<double> x = tridiag_solve(a, bb, c, r);
  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = alpha;
  std::vector<double> zc = tridiag_solve(a, bb, c, u);
  double fact = (x[0] + beta * x[n - 1] / gamma) /
                (1.0 + zc[0] + beta * zc[n - 1] / gamma);
  for (int i = 0; i < n; ++i) x[i] -= fact * zc[i];
  return x;
}

std::vector<double> cyclic_eigenvector(const std::vector<double>& d,
                                       const std::vector<double>& e,
                                       double mu) {
  const int n = static_cast<int>(d.size());
  // shift the target slightly off the eigenvalue so the solves stay finite
  const double shift = mu + (std::fabs(mu) + 1.0) * 1e-12;
  std::vector<double> a(n), b(n), c(n);
  for (int i = 0; i < n; ++i) {
    a[i] = e[(i + n - 1) % n];
    b[i] = d[i] - shift;
    c[i] = e[i];
  }
  std::mt19937_64 gen(0x5eed);
  std::normal_distribution<double> dist;
  std::vector<double> v(n);
  for (double& x : v) x = dist(gen);
  for (int pass = 0; pass < 4; ++pass) {
    v = cyclic_tridiag_solve(a, b, c, v);
    double s = 0.0;
    for (double x : v) s += x * x;
    s = std::sqrt(s);
    for (double& x : v) x /= s;
  }
  return v;
}

}  // namespace gslab::num
