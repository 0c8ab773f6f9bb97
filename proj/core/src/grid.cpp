#include "kp5/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kp5/errors.hpp"

namespace kp5 {

namespace {
bool pow2(int v) { return v >= 1 && (v & (v - 1)) == 0; }
}

int next_pow2(long long v) {
  long long p = 1;
  while (p < v) p <<= 1;
  if (p > (1LL << 30)) throw parameter_error("next_pow2: grid dimension out of range");
  return static_cast<int>(p);
}

void TorusGrid::validate() const {
  if (!pow2(nx) || !pow2(ny) || nx < 8 || ny < 8) {
    std::ostringstream os;
    os << "grid " << nx << "x" << ny << " invalid: dimensions must be powers of two >= 8";
    throw parameter_error(os.str());
  }
  if (!(lambda > 0) || dealias_num <= 0 || dealias_den <= 0 || dealias_num >= dealias_den) {
    throw parameter_error("grid: lambda must be positive and dealias fraction in (0,1)");
  }
}

bool TorusGrid::in_mask(int m, int k) const {
  return std::abs(m) <= max_m() && std::abs(k) <= max_k();
}

double TorusGrid::dx() const { return 2.0 * std::numbers::pi / nx; }
double TorusGrid::dy() const { return 2.0 * std::numbers::pi / (lambda * ny); }
double TorusGrid::area() const { return 4.0 * std::numbers::pi * std::numbers::pi / lambda; }

TorusGrid TorusGrid::sized_for(const AdmissibleIndex& idx) {
  long long n = idx.n_ll();
  long long alpha = idx.alpha_ll();
  TorusGrid g;
  g.nx = next_pow2(std::max(8LL, 8 * (n + 2)));
  g.ny = next_pow2(std::max(8LL, 4 * alpha));
  g.validate();
  return g;
}

TorusGrid TorusGrid::product_exact_for(const AdmissibleIndex& idx) {
  long long n = idx.n_ll();
  long long alpha = idx.alpha_ll();
  TorusGrid g = sized_for(idx);
  // Mask must reach 2(n+2) in m and 2*alpha in k: with the 2/3 rule that is
  // nx >= 3*(2n+4), ny >= 6*alpha, rounded up to powers of two.
  g.nx = std::max(g.nx, next_pow2(3 * (2 * n + 4)));
  g.ny = std::max(g.ny, next_pow2(6 * alpha));
  g.validate();
  return g;
}

}  // namespace kp5
