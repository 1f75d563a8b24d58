#pragma once
#include <cmath>
#include <functional>
#include <vector>

#include "gslab/errors.hpp"

namespace gslab::num {

using State = std::vector<double>;
using Deriv = std::function<void(double, const State&, State&)>;

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double h_init = 1e-2;
  double h_min = 1e-12;
  int max_steps = 2000000;
};

// Accepted-step record of an adaptive integration. eval() interpolates with a
// cubic Hermite through the step endpoints, using the stored derivatives.
struct DensePath {
  struct Node {
    double t;
    State y;
    State f;
  };
  std::vector<Node> nodes;
  bool step_underflow = false;

  double t_front() const { return nodes.front().t; }
  double t_back() const { return nodes.back().t; }
  State eval(double t) const;
};

// Dormand-Prince 5(4) with PI-free step control (classic 0.9 err^{-1/5}).
// Integrates from t0 to t1 (t1 > t0). On step underflow the path returned so
// far carries step_underflow = true; callers decide whether that is fatal.
DensePath rk45(const Deriv& f, State y0, double t0, double t1,
               const OdeOptions& opt = {});

// One classical fixed-size RK4 step, for resampling integrations where the
// output nodes themselves define the step grid.
State rk4_step(const Deriv& f, const State& y, double t, double h);

}  // namespace gslab::num
