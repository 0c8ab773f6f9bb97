#include "kp5/solver1d.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "kp5/errors.hpp"

namespace kp5 {

namespace {

std::mutex& plan_mutex_1d() {
  static std::mutex m;
  return m;
}

using CVec = std::vector<std::complex<double>>;

// Reusable 1D transform pair for the pseudospectral product.
struct Fft1D {
  int nx;
  double* real_;
  fftw_complex* cplx_;
  fftw_plan fwd_, inv_;

  explicit Fft1D(int n) : nx(n) {
    real_ = fftw_alloc_real(nx);
    cplx_ = fftw_alloc_complex(nx / 2 + 1);
    if (!real_ || !cplx_) throw numerical_error("Fft1D: allocation failed");
    std::lock_guard<std::mutex> lock(plan_mutex_1d());
    fwd_ = fftw_plan_dft_r2c_1d(nx, real_, cplx_, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_c2r_1d(nx, cplx_, real_, FFTW_ESTIMATE);
    if (!fwd_ || !inv_) throw numerical_error("Fft1D: planning failed");
  }
  ~Fft1D() {
    std::lock_guard<std::mutex> lock(plan_mutex_1d());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(inv_);
    fftw_free(real_);
    fftw_free(cplx_);
  }
  Fft1D(const Fft1D&) = delete;
  Fft1D& operator=(const Fft1D&) = delete;

  // out = -1/2 d/dx P(u^2), mask |m| <= (nx/2)*2/3 as on the 2D grid.
  void nonlinear(const CVec& in, CVec& out) {
    const int mxc = nx / 2 + 1;
    for (int m = 0; m < mxc; ++m) {
      cplx_[m][0] = in[m].real();
      cplx_[m][1] = in[m].imag();
    }
    fftw_execute(inv_);
    for (int i = 0; i < nx; ++i) real_[i] *= real_[i];
    fftw_execute(fwd_);
    out.resize(mxc);
    const int mask = (nx / 2) * 2 / 3;
    const double scale = 1.0 / nx;
    for (int m = 0; m < mxc; ++m) {
      if (m > mask) {
        out[m] = {0.0, 0.0};
      } else {
        const std::complex<double> w(cplx_[m][0] * scale, cplx_[m][1] * scale);
        out[m] = std::complex<double>(0.0, -0.5 * m) * w;
      }
    }
  }
};

void mul_table(CVec& x, const CVec& p) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] *= p[i];
}

void axpy(CVec& y, double a, const CVec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

double max_abs(const CVec& x) {
  double best = 0.0;
  for (const auto& v : x) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace

const Line& Trajectory1D::state_at(double t) const {
  if (states.empty() || !(dt > 0.0)) throw parameter_error("state_at: empty trajectory");
  const long long idx = std::llround(t / dt);
  if (idx < 0 || idx >= static_cast<long long>(states.size()) ||
      std::abs(idx * dt - t) > 1e-12 * std::max(1.0, std::abs(t))) {
    std::ostringstream msg;
    msg << "state_at: t = " << t << " is not a recorded step (dt = " << dt << ")";
    throw parameter_error(msg.str());
  }
  return states[static_cast<std::size_t>(idx)];
}

Trajectory1D evolve_1d_kdv5(const Line& u0, double dt, double t_end) {
  if (!(dt > 0.0)) throw parameter_error("evolve_1d_kdv5: dt must be positive");
  if (u0.nx < 8 || (u0.nx & (u0.nx - 1)) != 0) {
    throw parameter_error("evolve_1d_kdv5: nx must be a power of two >= 8");
  }
  const long long steps = std::llround(t_end / dt);
  if (steps < 0 ||
      std::abs(steps * dt - t_end) > 1e-9 * std::max(1.0, std::abs(t_end))) {
    throw parameter_error("evolve_1d_kdv5: t_end must be an integer multiple of dt");
  }

  const int mxc = u0.nx / 2 + 1;
  CVec full(mxc), half(mxc);
  for (int m = 0; m < mxc; ++m) {
    const double w = std::pow(double(m), 5);  // d/dt u_hat = i m^5 u_hat
    full[m] = std::polar(1.0, w * dt);
    half[m] = std::polar(1.0, 0.5 * w * dt);
  }

  Fft1D fft(u0.nx);
  Trajectory1D traj;
  traj.dt = dt;
  Line u = u0;
  traj.times.push_back(0.0);
  traj.states.push_back(u);
  traj.l2_history.push_back(line_l2(u));
  const double initial_max = max_abs(u.c);
  const double limit = 10.0 * std::max(initial_max, 1e-12);

  CVec a, b, c, d, tmp;
  for (long long s = 1; s <= steps; ++s) {
    fft.nonlinear(u.c, a);
    tmp = u.c;
    axpy(tmp, 0.5 * dt, a);
    mul_table(tmp, half);
    fft.nonlinear(tmp, b);
    tmp = u.c;
    mul_table(tmp, half);
    axpy(tmp, 0.5 * dt, b);
    fft.nonlinear(tmp, c);
    mul_table(b, half);
    mul_table(c, half);
    tmp = u.c;
    mul_table(tmp, full);
    d = tmp;
    axpy(d, dt, c);
    fft.nonlinear(d, d);
    mul_table(a, full);
    u.c = tmp;
    axpy(u.c, dt / 6.0, a);
    axpy(u.c, dt / 3.0, b);
    axpy(u.c, dt / 3.0, c);
    axpy(u.c, dt / 6.0, d);

    const double peak = max_abs(u.c);
    if (!std::isfinite(peak) || peak > limit) {
      std::ostringstream msg;
      msg << "1D evolution blow-up at t = " << s * dt << ": max |u_hat| = " << peak;
      throw numerical_error(msg.str());
    }
    traj.times.push_back(s * dt);
    traj.states.push_back(u);
    traj.l2_history.push_back(line_l2(u));
  }
  return traj;
}

}  // namespace kp5
