#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "kp5/norms.hpp"

namespace kp5 {

struct EvolveConfig {
  double dt = 1e-3;
  double t_end = 1.0;
  int log_every = 10;  // steps between norm records
  double sigma = 2.0;
  bool nonlinear = true;
  bool conserve_check = true;
  double l2_tolerance = 1e-6;   // relative drift tripping the check
  double blowup_factor = 10.0;  // max-coefficient growth treated as blow-up
};

struct Trajectory {
  std::vector<double> times;
  std::vector<NormReport> norm_history;
};

// dt = min(1e-3, 0.5 / (max|u0| * m_max)), the advective step rule.
double default_dt(const SpectralField& u0, Workspace2D& ws);

// Integrating-factor RK4 stepper. The linear phase e^{i omega dt} is applied
// exactly per mode; only the dealiased nonlinearity is integrated by RK4.
class Evolver2D {
 public:
  Evolver2D(const TorusGrid& grid, const EvolveConfig& cfg);

  const EvolveConfig& config() const { return cfg_; }
  const SpectralField& state() const { return u_; }
  double time() const { return step_count_ * cfg_.dt; }
  long long step_count() const { return step_count_; }

  void set_state(const SpectralField& u0);
  void advance(long long steps);  // throws numerical_error on blow-up
  NormReport report();

 private:
  void rk4_step();

  TorusGrid grid_;
  EvolveConfig cfg_;
  std::unique_ptr<Workspace2D> ws_;
  SpectralField u_;
  std::vector<std::complex<double>> phase_full_, phase_half_;
  SpectralField a_, b_, c_, d_, tmp_;
  long long step_count_ = 0;
  double initial_max_ = 0.0;
};

using EvolveObserver =
    std::function<void(double t, const SpectralField& u, const NormReport& r)>;

// Steps u0 to t_end, recording norms every log_every steps (including t = 0
// and t_end). t_end must be an integer multiple of dt.
Trajectory evolve(const SpectralField& u0, const EvolveConfig& cfg,
                  const EvolveObserver& observer = {});

// Single step convenience wrapper around Evolver2D.
SpectralField step_if_rk4(const SpectralField& u, double dt, bool nonlinear = true);

}  // namespace kp5
