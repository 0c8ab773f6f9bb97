#include "kp5/line.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "kp5/errors.hpp"
#include "kp5/field.hpp"

namespace kp5 {

namespace {
std::mutex& line_plan_mutex() {
  static std::mutex m;
  return m;
}
bool pow2(int v) { return v >= 1 && (v & (v - 1)) == 0; }
}  // namespace

Line::Line(int nx_pts) : nx(nx_pts) {
  if (nx == 0) return;
  if (!pow2(nx) || nx < 8) throw parameter_error("Line: nx must be a power of two >= 8");
  c.assign(nx / 2 + 1, {0.0, 0.0});
}

void Line::add_cos(int m, double amp, double phase) {
  if (m < 0 || m > max_mode()) throw parameter_error("Line::add_cos: mode outside grid");
  if (m == 0) {
    c[0] += amp * std::cos(phase);
  } else {
    c[m] += 0.5 * amp * std::polar(1.0, phase);
  }
}

Line& Line::operator-=(const Line& o) {
  if (nx != o.nx) throw parameter_error("Line -=: size mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Line operator-(const Line& a, const Line& b) {
  Line out = a;
  out -= b;
  return out;
}

std::vector<double> line_to_physical(const Line& u) {
  std::vector<double> out(u.nx);
  std::vector<std::complex<double>> tmp(u.c);
  std::lock_guard<std::mutex> lock(line_plan_mutex());
  fftw_plan p = fftw_plan_dft_c2r_1d(u.nx, reinterpret_cast<fftw_complex*>(tmp.data()),
                                     out.data(), FFTW_ESTIMATE);
  fftw_execute(p);
  fftw_destroy_plan(p);
  return out;
}

Line line_from_physical(const std::vector<double>& samples) {
  Line u(static_cast<int>(samples.size()));
  std::vector<double> tmp(samples);
  {
    std::lock_guard<std::mutex> lock(line_plan_mutex());
    fftw_plan p = fftw_plan_dft_r2c_1d(u.nx, tmp.data(),
                                       reinterpret_cast<fftw_complex*>(u.c.data()),
                                       FFTW_ESTIMATE);
    fftw_execute(p);
    fftw_destroy_plan(p);
  }
  for (auto& z : u.c) z /= u.nx;
  return u;
}

double line_l2(const Line& u) {
  double s = 0.0;
  for (int m = 0; m <= u.max_mode(); ++m) {
    double w = (m == 0 || m == u.max_mode()) ? 1.0 : 2.0;
    s += w * std::norm(u.c[m]);
  }
  return std::sqrt(2.0 * std::numbers::pi * s);
}

double line_hs_norm(const Line& u, double s) {
  double total = 0.0;
  for (int m = 0; m <= u.max_mode(); ++m) {
    double w = (m == 0 || m == u.max_mode()) ? 1.0 : 2.0;
    total += w * std::pow(1.0 + static_cast<double>(m) * m, s) * std::norm(u.c[m]);
  }
  return std::sqrt(2.0 * std::numbers::pi * total);
}

double line_max_abs(const Line& u) {
  double best = 0.0;
  for (double v : line_to_physical(u)) best = std::max(best, std::abs(v));
  return best;
}

Line line_x_derivative(const Line& u, int order) {
  if (order < -1) throw parameter_error("line_x_derivative: order must be >= -1");
  if (order < 0 && std::abs(u.c[0]) > 0.0) {
    throw parameter_error("line_x_derivative: negative order requires zero mean");
  }
  Line out = u;
  for (int m = 0; m <= u.max_mode(); ++m) {
    std::complex<double> im(0.0, static_cast<double>(m));
    std::complex<double> mult{1.0, 0.0};
    if (order >= 0) {
      for (int p = 0; p < order; ++p) mult *= im;
    } else {
      mult = (m == 0) ? std::complex<double>{0.0, 0.0} : 1.0 / im;
    }
    out.c[m] *= mult;
  }
  return out;
}

SpectralField embed_1d(const Line& u, const TorusGrid& grid) {
  if (u.max_mode() > grid.nx / 2) throw parameter_error("embed_1d: line finer than grid");
  SpectralField out(grid);
  for (int m = 0; m <= u.max_mode(); ++m) out.raw(m, 0) = u.c[m];
  return out;
}

}  // namespace kp5
