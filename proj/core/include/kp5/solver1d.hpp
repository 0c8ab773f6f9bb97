#pragma once

#include <vector>

#include "kp5/line.hpp"

namespace kp5 {

// States of the x-only reduction d/dt u = d^5/dx^5 u - u du/dx, one per step.
struct Trajectory1D {
  double dt = 0.0;
  std::vector<double> times;
  std::vector<Line> states;
  std::vector<double> l2_history;

  // State at time t, which must coincide with a recorded step.
  const Line& state_at(double t) const;
};

// Integrating-factor RK4 on the circle with phase e^{i m^5 dt} and the
// dealiased nonlinearity -1/2 d/dx (u^2). t_end must be a multiple of dt.
Trajectory1D evolve_1d_kdv5(const Line& u0, double dt, double t_end);

}  // namespace kp5
