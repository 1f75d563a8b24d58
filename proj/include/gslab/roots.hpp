#pragma once
#include <cmath>

#include "gslab/errors.hpp"

namespace gslab::num {

struct RootResult {
  double x = 0;
  double fx = 0;
  int iterations = 0;
};

// Bracketing scalar root finder. Keeps a sign-changing interval at all times;
// each step tries the secant point through the bracket endpoints and falls
// back to bisection whenever the secant leaves the interval or the previous
// step failed to halve it, so convergence never stalls.
// Requires f(lo) and f(hi) of opposite sign; throws NoBracket otherwise.
template <class F>
RootResult find_root(F&& f, double lo, double hi,
                     double xtol = 1e-14, double ftol = 0.0) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  if ((flo > 0) == (fhi > 0))
    fail_pre("NoBracket", "root finder endpoints have the same sign");

  constexpr int kMaxIter = 200;
  double prev_width = std::fabs(hi - lo);
  bool force_bisect = false;
  for (int it = 1; it <= kMaxIter; ++it) {
    double x = 0.5 * (lo + hi);
    if (!force_bisect && fhi != flo) {
      double sec = (lo * fhi - hi * flo) / (fhi - flo);
      if (sec > std::fmin(lo, hi) && sec < std::fmax(lo, hi)) x = sec;
    }
    double fx = f(x);
    if (fx == 0.0 || std::fabs(fx) <= ftol) return {x, fx, it};
    if ((fx > 0) == (flo > 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    double width = std::fabs(hi - lo);
    if (width < xtol) return {0.5 * (lo + hi), fx, it};
    force_bisect = width > 0.5 * prev_width;
    prev_width = width;
  }
  fail_tol("RootIterationCap", "root finder hit the 200-iteration cap");
}

// Geometric bracket growth around [lo,hi] until f changes sign.
// Returns false if no sign change appears within max_grow doublings.
template <class F>
bool expand_bracket(F&& f, double& lo, double& hi, int max_grow = 40) {
  double flo = f(lo), fhi = f(hi);
  for (int i = 0; i < max_grow; ++i) {
    if ((flo > 0) != (fhi > 0)) return true;
    double w = hi - lo;
    lo -= 0.5 * w;
    hi += 0.5 * w;
    flo = f(lo);
    fhi = f(hi);
  }
  return (flo > 0) != (fhi > 0);
}

}  // namespace gslab::num
