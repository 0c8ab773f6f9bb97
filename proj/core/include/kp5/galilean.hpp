#pragma once

#include "kp5/line.hpp"

namespace kp5 {

// Mean-coupled translation G_t^{sign}: u0 -> u0(. + sign*t*mean(u0)) - sign*mean(u0).
// Implemented as an exact spectral phase shift. sign must be +1 or -1.
Line galilean_1d(const Line& u0, double t, int sign);

}  // namespace kp5
