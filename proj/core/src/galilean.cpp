#include "kp5/galilean.hpp"

#include <cmath>
#include <complex>

#include "kp5/errors.hpp"

namespace kp5 {

Line galilean_1d(const Line& u0, double t, int sign) {
  if (sign != 1 && sign != -1) throw parameter_error("galilean_1d: sign must be +1 or -1");
  const double mu = u0.mean();
  Line out = u0;
  const double shift = sign * t * mu;  // u0(x + shift)
  for (int m = 1; m <= out.max_mode(); ++m) {
    out.c[m] *= std::polar(1.0, m * shift);
  }
  out.c[0] -= sign * mu;
  return out;
}

}  // namespace kp5
