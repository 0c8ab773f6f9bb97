#pragma once

#include <vector>

#include "kp5/field.hpp"

namespace kp5 {

// FFTW scratch area bound to one grid size. Plans are created once
// (FFTW_ESTIMATE, deterministic) and reused; creation is serialized
// internally because FFTW planning is not thread safe.
class Workspace2D {
 public:
  explicit Workspace2D(const TorusGrid& grid);
  ~Workspace2D();
  Workspace2D(const Workspace2D&) = delete;
  Workspace2D& operator=(const Workspace2D&) = delete;

  const TorusGrid& grid() const { return grid_; }

  // Spectral -> physical samples u(x_i, y_j), row-major in y.
  void to_physical(const SpectralField& u, std::vector<double>& phys);
  // Physical samples -> normalized Fourier coefficients.
  void to_spectral(const std::vector<double>& phys, SpectralField& u);

  // Dealiased pseudospectral nonlinearity N(u) = -1/2 d/dx (u^2).
  void nonlinear_term(const SpectralField& u, SpectralField& out);

  double max_abs_physical(const SpectralField& u);

 private:
  TorusGrid grid_;
  double* real_ = nullptr;
  void* cplx_ = nullptr;  // fftw_complex buffer
  void* plan_fwd_ = nullptr;
  void* plan_inv_ = nullptr;
};

}  // namespace kp5
