#include "kp5/field.hpp"

#include <cmath>
#include <cstdlib>

#include "kp5/errors.hpp"

namespace kp5 {

SpectralField::SpectralField(const TorusGrid& grid) : grid_(grid) {
  grid_.validate();
  c_.assign(static_cast<std::size_t>(mx_count()) * grid_.ny, {0.0, 0.0});
}

std::complex<double>& SpectralField::raw(int mx, int ky) {
  return c_[static_cast<std::size_t>(ky) * mx_count() + mx];
}

const std::complex<double>& SpectralField::raw(int mx, int ky) const {
  return c_[static_cast<std::size_t>(ky) * mx_count() + mx];
}

int SpectralField::ky_of(int k) const { return k >= 0 ? k : k + grid_.ny; }

int SpectralField::k_of(int ky) const { return ky <= grid_.ny / 2 ? ky : ky - grid_.ny; }

std::complex<double> SpectralField::coef(int m, int k) const {
  if (std::abs(m) > grid_.nx / 2 || std::abs(k) > grid_.ny / 2) return {0.0, 0.0};
  if (m >= 0) return raw(m, ky_of(k));
  return std::conj(raw(-m, ky_of(-k)));
}

void SpectralField::add_mode(int m, int k, std::complex<double> amp) {
  if (std::abs(m) > grid_.nx / 2 || std::abs(k) > grid_.ny / 2) {
    throw parameter_error("add_mode: frequency outside grid");
  }
  if (m > 0) {
    raw(m, ky_of(k)) += amp;
  } else if (m < 0) {
    raw(-m, ky_of(-k)) += std::conj(amp);
  } else if (k != 0) {
    raw(0, ky_of(k)) += amp;
    raw(0, ky_of(-k)) += std::conj(amp);
  } else {
    if (std::abs(amp.imag()) > 1e-15 * (1.0 + std::abs(amp.real()))) {
      throw parameter_error("add_mode: (0,0) amplitude must be real");
    }
    raw(0, 0) += amp.real();
  }
}

void SpectralField::set_zero() { c_.assign(c_.size(), {0.0, 0.0}); }

void SpectralField::scale(double s) {
  for (auto& z : c_) z *= s;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  if (!(grid_ == o.grid_)) throw parameter_error("field +=: grid mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  if (!(grid_ == o.grid_)) throw parameter_error("field -=: grid mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

double SpectralField::max_abs_coef() const {
  double best = 0.0;
  for (const auto& z : c_) best = std::max(best, std::abs(z));
  return best;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
  SpectralField out = a;
  out -= b;
  return out;
}

SpectralField x_derivative(const SpectralField& u, int order) {
  if (order < -1) throw parameter_error("x_derivative: order must be >= -1");
  if (order < 0 && x_mean_column_energy(u) > 0.0) {
    throw parameter_error("x_derivative: negative order requires a vanishing m = 0 column");
  }
  SpectralField out = u;
  const TorusGrid& g = u.grid();
  for (int ky = 0; ky < g.ny; ++ky) {
    for (int mx = 0; mx <= g.nx / 2; ++mx) {
      std::complex<double> im(0.0, static_cast<double>(mx));
      std::complex<double> mult;
      if (order >= 0) {
        mult = {1.0, 0.0};
        for (int p = 0; p < order; ++p) mult *= im;
      } else {
        mult = (mx == 0) ? std::complex<double>{0.0, 0.0} : 1.0 / im;
      }
      out.raw(mx, ky) *= mult;
    }
  }
  return out;
}

SpectralField y_derivative(const SpectralField& u) {
  SpectralField out = u;
  const TorusGrid& g = u.grid();
  for (int ky = 0; ky < g.ny; ++ky) {
    double eta = g.lambda * out.k_of(ky);  // physical y-frequency lambda*k
    for (int mx = 0; mx <= g.nx / 2; ++mx) {
      out.raw(mx, ky) *= std::complex<double>(0.0, eta);
    }
  }
  return out;
}

void zero_x_mean(SpectralField& u) {
  for (int ky = 0; ky < u.grid().ny; ++ky) u.raw(0, ky) = {0.0, 0.0};
}

void apply_dealias(SpectralField& u) {
  const TorusGrid& g = u.grid();
  for (int ky = 0; ky < g.ny; ++ky) {
    int k = u.k_of(ky);
    for (int mx = 0; mx <= g.nx / 2; ++mx) {
      if (!g.in_mask(mx, k)) u.raw(mx, ky) = {0.0, 0.0};
    }
  }
}

double x_mean_column_energy(const SpectralField& u) {
  double e = 0.0;
  for (int ky = 0; ky < u.grid().ny; ++ky) e += std::norm(u.raw(0, ky));
  return e;
}

}  // namespace kp5
