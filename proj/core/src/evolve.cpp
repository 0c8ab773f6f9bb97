#include "kp5/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kp5/errors.hpp"

namespace kp5 {

namespace {

using CVec = std::vector<std::complex<double>>;

void mul_table(CVec& x, const CVec& p) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] *= p[i];
}

void axpy(CVec& y, double a, const CVec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

// Largest squared coefficient modulus; avoids a sqrt per element.
double max_sq(const CVec& x) {
  double best = 0.0;
  for (const auto& v : x) best = std::max(best, std::norm(v));
  return best;
}

}  // namespace

double default_dt(const SpectralField& u0, Workspace2D& ws) {
  const double cap = 1e-3;
  const double umax = ws.max_abs_physical(u0);
  const int mmax = u0.grid().max_m();
  if (umax <= 0.0 || mmax <= 0) return cap;
  return std::min(cap, 0.5 / (umax * mmax));
}

Evolver2D::Evolver2D(const TorusGrid& grid, const EvolveConfig& cfg)
    : grid_(grid),
      cfg_(cfg),
      ws_(std::make_unique<Workspace2D>(grid)),
      u_(grid),
      a_(grid),
      b_(grid),
      c_(grid),
      d_(grid),
      tmp_(grid) {
  if (!(cfg_.dt > 0.0)) throw parameter_error("Evolver2D: dt must be positive");
  const int mxc = grid_.nx / 2 + 1;
  phase_full_.resize(static_cast<std::size_t>(grid_.ny) * mxc);
  phase_half_.resize(phase_full_.size());
  for (int ky = 0; ky < grid_.ny; ++ky) {
    const int k = u_.k_of(ky);
    for (int mx = 0; mx < mxc; ++mx) {
      double w = 0.0;  // dispersion omega(m, lambda k) = m^5 + 35 k^2 / m
      if (mx > 0) {
        const double m = mx;
        w = m * m * m * m * m + 35.0 * double(k) * double(k) / m;
      }
      const std::size_t i = static_cast<std::size_t>(ky) * mxc + mx;
      phase_full_[i] = std::polar(1.0, w * cfg_.dt);
      phase_half_[i] = std::polar(1.0, 0.5 * w * cfg_.dt);
    }
  }
}

void Evolver2D::set_state(const SpectralField& u0) {
  if (!(u0.grid() == grid_)) throw parameter_error("Evolver2D: grid mismatch");
  u_ = u0;
  step_count_ = 0;
  initial_max_ = u_.max_abs_coef();
}

void Evolver2D::rk4_step() {
  const double dt = cfg_.dt;
  if (!cfg_.nonlinear) {
    mul_table(u_.data(), phase_full_);  // exact linear flow
    return;
  }
  ws_->nonlinear_term(u_, a_);  // a = N(u)
  tmp_ = u_;
  axpy(tmp_.data(), 0.5 * dt, a_.data());
  mul_table(tmp_.data(), phase_half_);
  ws_->nonlinear_term(tmp_, b_);  // b = N(E2 (u + dt/2 a))
  tmp_ = u_;
  mul_table(tmp_.data(), phase_half_);
  axpy(tmp_.data(), 0.5 * dt, b_.data());
  ws_->nonlinear_term(tmp_, c_);  // c = N(E2 u + dt/2 b)
  mul_table(b_.data(), phase_half_);
  mul_table(c_.data(), phase_half_);
  tmp_ = u_;
  mul_table(tmp_.data(), phase_full_);  // tmp = E u, reused below
  d_ = tmp_;
  axpy(d_.data(), dt, c_.data());
  ws_->nonlinear_term(d_, d_);  // d = N(E u + dt E2 c)
  mul_table(a_.data(), phase_full_);
  u_ = tmp_;
  axpy(u_.data(), dt / 6.0, a_.data());
  axpy(u_.data(), dt / 3.0, b_.data());
  axpy(u_.data(), dt / 3.0, c_.data());
  axpy(u_.data(), dt / 6.0, d_.data());
}

void Evolver2D::advance(long long steps) {
  const double limit = cfg_.blowup_factor * std::max(initial_max_, 1e-12);
  const double limit_sq = limit * limit;
  for (long long s = 0; s < steps; ++s) {
    rk4_step();
    ++step_count_;
    const double peak_sq = max_sq(u_.data());
    if (!std::isfinite(peak_sq) || peak_sq > limit_sq) {
      std::ostringstream msg;
      msg << "evolution blow-up at t = " << time()
          << ": max |u_hat| = " << std::sqrt(peak_sq)
          << " exceeds " << limit << " (initial " << initial_max_ << ")";
      throw numerical_error(msg.str());
    }
  }
}

NormReport Evolver2D::report() { return norms(u_, cfg_.sigma, *ws_); }

Trajectory evolve(const SpectralField& u0, const EvolveConfig& cfg,
                  const EvolveObserver& observer) {
  if (cfg.log_every < 1) throw parameter_error("evolve: log_every must be >= 1");
  const double raw_steps = cfg.t_end / cfg.dt;
  const long long steps = std::llround(raw_steps);
  if (steps < 0 || std::abs(steps * cfg.dt - cfg.t_end) >
                       1e-9 * std::max(1.0, std::abs(cfg.t_end))) {
    throw parameter_error("evolve: t_end must be a nonnegative integer multiple of dt");
  }
  Evolver2D ev(u0.grid(), cfg);
  ev.set_state(u0);
  Trajectory traj;
  auto record = [&]() {
    NormReport r = ev.report();
    traj.times.push_back(ev.time());
    traj.norm_history.push_back(r);
    if (observer) observer(ev.time(), ev.state(), r);
  };
  record();
  const double l2_0 = traj.norm_history.front().l2;
  long long done = 0;
  while (done < steps) {
    const long long chunk = std::min<long long>(cfg.log_every, steps - done);
    ev.advance(chunk);
    done += chunk;
    record();
    if (cfg.conserve_check) {
      const double l2 = traj.norm_history.back().l2;
      if (std::abs(l2 - l2_0) > cfg.l2_tolerance * std::max(l2_0, 1e-300)) {
        std::ostringstream msg;
        msg << "L2 conservation violated at t = " << ev.time() << ": " << l2
            << " vs initial " << l2_0;
        throw numerical_error(msg.str());
      }
    }
  }
  return traj;
}

SpectralField step_if_rk4(const SpectralField& u, double dt, bool nonlinear) {
  EvolveConfig cfg;
  cfg.dt = dt;
  cfg.t_end = dt;
  cfg.nonlinear = nonlinear;
  Evolver2D ev(u.grid(), cfg);
  ev.set_state(u);
  ev.advance(1);
  return ev.state();
}

}  // namespace kp5
