#include "kp5/norms.hpp"

#include <cmath>

#include "kp5/errors.hpp"

namespace kp5 {

namespace {

// Sum of w(m,k)*|u_hat|^2 over the full spectrum, using half-spectrum storage:
// interior columns 0 < m < nx/2 count twice.
template <typename Weight>
double mode_sum(const SpectralField& u, Weight w) {
  const TorusGrid& g = u.grid();
  double total = 0.0;
  for (int ky = 0; ky < g.ny; ++ky) {
    int k = u.k_of(ky);
    for (int mx = 0; mx <= g.nx / 2; ++mx) {
      double e = std::norm(u.raw(mx, ky));
      if (e == 0.0) continue;
      double mult = (mx == 0 || mx == g.nx / 2) ? 1.0 : 2.0;
      total += mult * e * w(mx, k);
    }
  }
  return total;
}

}  // namespace

double l2_norm(const SpectralField& u) {
  double s = mode_sum(u, [](int, int) { return 1.0; });
  return std::sqrt(u.grid().area() * s);
}

double xy_seminorm(const SpectralField& u, double a, int b) {
  // The m = 0 column has no dispersion weight; it carries weight zero here. Callers
  // that need strict enforcement go through norms() or x_derivative().
  const double lambda = u.grid().lambda;
  double s = mode_sum(u, [&](int m, int k) {
    double xw = (m == 0) ? (a == 0.0 ? 1.0 : 0.0) : std::pow(static_cast<double>(m), 2.0 * a);
    double yw = 1.0;
    for (int p = 0; p < b; ++p) yw *= (lambda * k) * (lambda * k);
    return xw * yw;
  });
  return std::sqrt(u.grid().area() * s);
}

double cubic_integral(const SpectralField& u, Workspace2D& ws) {
  std::vector<double> phys;
  ws.to_physical(u, phys);
  double s = 0.0;
  for (double v : phys) s += v * v * v;
  return s * u.grid().dx() * u.grid().dy();
}

NormReport norms(const SpectralField& u, double sigma, Workspace2D& ws) {
  double total = mode_sum(u, [](int, int) { return 1.0; });
  double mean_col = x_mean_column_energy(u);
  if (total > 0.0 && mean_col > 1e-12 * total) {
    throw numerical_error("norms: m = 0 column must vanish for the inverse-derivative norm");
  }

  NormReport r;
  r.sigma = sigma;
  double area = u.grid().area();
  double l2sq = area * total;
  double dx2 = xy_seminorm(u, 2.0, 0);
  double dxs = xy_seminorm(u, sigma, 0);
  double dxinv_dy = xy_seminorm(u, -1.0, 1);
  double dxs3_dy = xy_seminorm(u, sigma - 3.0, 1);

  r.l2 = std::sqrt(l2sq);
  r.e2 = std::sqrt(l2sq + dx2 * dx2 + dxinv_dy * dxinv_dy);
  r.e_sigma = std::sqrt(l2sq + dxs * dxs + dxinv_dy * dxinv_dy + dxs3_dy * dxs3_dy);
  r.hamiltonian = 0.5 * dx2 * dx2 + 0.5 * dxinv_dy * dxinv_dy - cubic_integral(u, ws) / 6.0;
  return r;
}

}  // namespace kp5
