#pragma once

#include <complex>
#include <vector>

#include "kp5/grid.hpp"

namespace kp5 {

// Real scalar field on the torus, stored as the Fourier half-spectrum
// c[ky * (nx/2+1) + m] = u_hat(m, k), m in [0, nx/2], ky = k mod ny.
// The m < 0 half is implied: u_hat(-m,-k) = conj(u_hat(m,k)). Within the
// m = 0 column the symmetry couples (0,k) and (0,-k) explicitly.
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(const TorusGrid& grid);

  const TorusGrid& grid() const { return grid_; }
  int mx_count() const { return grid_.nx / 2 + 1; }

  std::complex<double>& raw(int mx, int ky);
  const std::complex<double>& raw(int mx, int ky) const;
  std::vector<std::complex<double>>& data() { return c_; }
  const std::vector<std::complex<double>>& data() const { return c_; }

  int ky_of(int k) const;  // signed k -> storage row
  int k_of(int ky) const;  // storage row -> signed k

  // Coefficient at signed (m, k); reads through the Hermitian symmetry.
  std::complex<double> coef(int m, int k) const;

  // Adds the Hermitian pair u_hat(m,k) += amp, u_hat(-m,-k) += conj(amp).
  // The (0,0) mode must be added with a real amplitude.
  void add_mode(int m, int k, std::complex<double> amp);

  void set_zero();
  void scale(double s);

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);

  // Largest |coefficient|; cheap blow-up detector.
  double max_abs_coef() const;

 private:
  TorusGrid grid_;
  std::vector<std::complex<double>> c_;
};

SpectralField operator-(const SpectralField& a, const SpectralField& b);

// Spectral multipliers. Orders >= -1; order < 0 requires an empty m = 0 column,
// which is checked.
SpectralField x_derivative(const SpectralField& u, int order);
SpectralField y_derivative(const SpectralField& u);

// Zeroes the m = 0 column (mean in x of every transverse mode).
void zero_x_mean(SpectralField& u);

// Zeroes every mode outside the dealias mask of the field's own grid.
void apply_dealias(SpectralField& u);

double x_mean_column_energy(const SpectralField& u);

}  // namespace kp5
