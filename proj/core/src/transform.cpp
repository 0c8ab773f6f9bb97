#include "kp5/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>

#include "kp5/errors.hpp"

namespace kp5 {

namespace {
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Workspace2D::Workspace2D(const TorusGrid& grid) : grid_(grid) {
  grid_.validate();
  const std::size_t nreal = static_cast<std::size_t>(grid_.ny) * grid_.nx;
  const std::size_t ncplx = static_cast<std::size_t>(grid_.ny) * (grid_.nx / 2 + 1);
  real_ = fftw_alloc_real(nreal);
  cplx_ = fftw_alloc_complex(ncplx);
  if (!real_ || !cplx_) throw numerical_error("Workspace2D: allocation failed");
  std::lock_guard<std::mutex> lock(plan_mutex());
  // Physical layout is u[y][x], so the transformed (halved) axis is x.
  plan_fwd_ = fftw_plan_dft_r2c_2d(grid_.ny, grid_.nx, real_,
                                   static_cast<fftw_complex*>(cplx_), FFTW_ESTIMATE);
  plan_inv_ = fftw_plan_dft_c2r_2d(grid_.ny, grid_.nx,
                                   static_cast<fftw_complex*>(cplx_), real_, FFTW_ESTIMATE);
  if (!plan_fwd_ || !plan_inv_) throw numerical_error("Workspace2D: FFTW planning failed");
}

Workspace2D::~Workspace2D() {
  std::lock_guard<std::mutex> lock(plan_mutex());
  if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  if (plan_inv_) fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
  if (real_) fftw_free(real_);
  if (cplx_) fftw_free(cplx_);
}

void Workspace2D::to_physical(const SpectralField& u, std::vector<double>& phys) {
  if (!(u.grid() == grid_)) throw parameter_error("to_physical: grid mismatch");
  const std::size_t ncplx = static_cast<std::size_t>(grid_.ny) * (grid_.nx / 2 + 1);
  auto* c = static_cast<fftw_complex*>(cplx_);
  const auto& src = u.data();
  for (std::size_t i = 0; i < ncplx; ++i) {
    c[i][0] = src[i].real();
    c[i][1] = src[i].imag();
  }
  fftw_execute(static_cast<fftw_plan>(plan_inv_));
  phys.assign(real_, real_ + static_cast<std::size_t>(grid_.ny) * grid_.nx);
}

void Workspace2D::to_spectral(const std::vector<double>& phys, SpectralField& u) {
  const std::size_t nreal = static_cast<std::size_t>(grid_.ny) * grid_.nx;
  if (phys.size() != nreal) throw parameter_error("to_spectral: sample count mismatch");
  for (std::size_t i = 0; i < nreal; ++i) real_[i] = phys[i];
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  const std::size_t ncplx = static_cast<std::size_t>(grid_.ny) * (grid_.nx / 2 + 1);
  if (!(u.grid() == grid_) || u.data().size() != ncplx) u = SpectralField(grid_);
  auto* c = static_cast<fftw_complex*>(cplx_);
  auto& dst = u.data();
  const double scale = 1.0 / nreal;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = {c[i][0] * scale, c[i][1] * scale};
  }
}

void Workspace2D::nonlinear_term(const SpectralField& u, SpectralField& out) {
  std::vector<double> phys;
  to_physical(u, phys);
  for (auto& v : phys) v *= v;
  to_spectral(phys, out);
  const TorusGrid& g = grid_;
  for (int ky = 0; ky < g.ny; ++ky) {
    int k = out.k_of(ky);
    for (int mx = 0; mx <= g.nx / 2; ++mx) {
      if (!g.in_mask(mx, k)) {
        out.raw(mx, ky) = {0.0, 0.0};
      } else {
        out.raw(mx, ky) *= std::complex<double>(0.0, -0.5 * mx);  // -1/2 * i m
      }
    }
  }
}

double Workspace2D::max_abs_physical(const SpectralField& u) {
  std::vector<double> phys;
  to_physical(u, phys);
  double best = 0.0;
  for (double v : phys) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace kp5
