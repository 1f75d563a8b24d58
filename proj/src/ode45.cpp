#include "gslab/ode45.hpp"

#include <algorithm>

namespace gslab::num {

namespace {

// Dormand-Prince tableau. b5 is the propagating 5th-order weight row,
// b4 the embedded 4th-order row used for the error estimate.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                 a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double b51 = 35.0 / 384.0, b53 = 500.0 / 1113.0, b54 = 125.0 / 192.0,
                 b55 = -2187.0 / 6784.0, b56 = 11.0 / 84.0;
constexpr double b41 = 5179.0 / 57600.0, b43 = 7571.0 / 16695.0,
                 b44 = 393.0 / 640.0, b45 = -92097.0 / 339200.0,
                 b46 = 187.0 / 2100.0, b47 = 1.0 / 40.0;

State axpy(const State& y, double h, const State& k) {
  State out(y);
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += h * k[i];
  return out;
}

}  // namespace

State DensePath::eval(double t) const {
  // locate the step containing t, clamping to the integrated range
  if (t <= nodes.front().t) return nodes.front().y;
  if (t >= nodes.back().t) return nodes.back().y;
  std::size_t lo = 0, hi = nodes.size() - 1;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    (nodes[mid].t <= t ? lo : hi) = mid;
  }
  const Node& n0 = nodes[lo];
  const Node& n1 = nodes[hi];
  double h = n1.t - n0.t;
  double u = (t - n0.t) / h;
  double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
  double h10 = u * (1 - u) * (1 - u);
  double h01 = u * u * (3 - 2 * u);
  double h11 = u * u * (u - 1);
  State out(n0.y.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = h00 * n0.y[i] + h * h10 * n0.f[i] + h01 * n1.y[i] + h * h11 * n1.f[i];
  return out;
}

DensePath rk45(const Deriv& f, State y0, double t0, double t1, const OdeOptions& opt) {
  const std::size_t d = y0.size();
  DensePath path;
  State k1(d), k2(d), k3(d), k4(d), k5(d), k6(d), k7(d);
  f(t0, y0, k1);
  path.nodes.push_back({t0, y0, k1});

  double t = t0;
  double h = std::min(opt.h_init, t1 - t0);
  const double t_eps = 1e-14 * std::max(1.0, std::fabs(t1));
  State y = std::move(y0);
  for (int step = 0; step < opt.max_steps && t < t1 - t_eps; ++step) {
    h = std::min(h, t1 - t);
    if (h < opt.h_min) {
      path.step_underflow = true;
      return path;
    }
    State y2 = axpy(y, h * a21, k1);
    f(t + h / 5.0, y2, k2);
    State y3(y);
    for (std::size_t i = 0; i < d; ++i) y3[i] += h * (a31 * k1[i] + a32 * k2[i]);
    f(t + 0.3 * h, y3, k3);
    State y4(y);
    for (std::size_t i = 0; i < d; ++i)
      y4[i] += h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + 0.8 * h, y4, k4);
    State y5(y);
    for (std::size_t i = 0; i < d; ++i)
      y5[i] += h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + 8.0 / 9.0 * h, y5, k5);
    State y6(y);
    for (std::size_t i = 0; i < d; ++i)
      y6[i] += h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    f(t + h, y6, k6);
    State ynew(y);
    for (std::size_t i = 0; i < d; ++i)
      ynew[i] += h * (b51 * k1[i] + b53 * k3[i] + b54 * k4[i] + b55 * k5[i] + b56 * k6[i]);
    f(t + h, ynew, k7);

    double err = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      double y4th = y[i] + h * (b41 * k1[i] + b43 * k3[i] + b44 * k4[i] +
                                b45 * k5[i] + b46 * k6[i] + b47 * k7[i]);
      double sc = opt.atol + opt.rtol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
      double e = (ynew[i] - y4th) / sc;
      err += e * e;
    }
    err = std::sqrt(err / d);

    if (err <= 1.0) {
      t += h;
      y = std::move(ynew);
      k1 = k7;  // FSAL
      path.nodes.push_back({t, y, k1});
    }
    double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    h *= std::clamp(fac, 0.2, 5.0);
  }
  if (t < t1 - t_eps) path.step_underflow = true;
  return path;
}

State rk4_step(const Deriv& f, const State& y, double t, double h) {
  const std::size_t d = y.size();
  State k1(d), k2(d), k3(d), k4(d);
  f(t, y, k1);
  f(t + 0.5 * h, axpy(y, 0.5 * h, k1), k2);
  f(t + 0.5 * h, axpy(y, 0.5 * h, k2), k3);
  f(t + h, axpy(y, h, k3), k4);
  State out(y);
  for (std::size_t i = 0; i < d; ++i)
    out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

}  // namespace gslab::num
