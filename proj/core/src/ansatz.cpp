#include "kp5/ansatz.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kp5/errors.hpp"
#include "kp5/line.hpp"
#include "kp5/norms.hpp"

namespace kp5 {

namespace {

// Largest |freq * t| for which a double phase still carries ~1e-6 radians of
// accuracy. Larger arguments would silently destroy the residual measurement.
constexpr double phase_budget = 4.294967296e9;  // 2^32

void check_phase_budget(const Rational& freq, double t) {
  const double arg = std::abs(to_double(freq) * t);
  if (arg > phase_budget) {
    std::ostringstream msg;
    msg << "phase budget exceeded: |omega * t| = " << arg
        << " cannot be represented to working precision in double arithmetic";
    throw parameter_error(msg.str());
  }
}

double envelope_value(Envelope env, double theta, double t) {
  switch (env) {
    case Envelope::One: return 1.0;
    case Envelope::CosHalf: return std::cos(0.5 * theta * t);
    case Envelope::SinHalf: return std::sin(0.5 * theta * t);
  }
  return 0.0;
}

double envelope_slope(Envelope env, double theta, double t) {
  switch (env) {
    case Envelope::One: return 0.0;
    case Envelope::CosHalf: return -0.5 * theta * std::sin(0.5 * theta * t);
    case Envelope::SinHalf: return 0.5 * theta * std::cos(0.5 * theta * t);
  }
  return 0.0;
}

// Coefficient of carrier(psi) at the positive-m lattice point: cos psi
// contributes 1/2 e^{i c t}, sin psi contributes -i/2 e^{i c t}.
std::complex<double> carrier_coefficient(const ExplicitMode& mode, double t) {
  const double arg = to_double(mode.freq) * t;
  std::complex<double> c = 0.5 * std::polar(1.0, arg);
  if (mode.car == Carrier::Sin) c *= std::complex<double>(0.0, -1.0);
  return c;
}

void add_modes(SpectralField& out, const AnsatzParams& p, double t, bool defect) {
  for (const ExplicitMode& mode : explicit_modes(p)) {
    const std::complex<double> c =
        defect ? mode_defect_coefficient(mode, p.theta, t)
               : mode_coefficient(mode, p.theta, t);
    out.add_mode(static_cast<int>(mode.m), static_cast<int>(mode.k), c);
  }
}

void require_modes_resolved(const AnsatzParams& p, const TorusGrid& grid) {
  const long long n = p.idx.n_ll();
  const long long alpha = p.idx.alpha_ll();
  if (n + 2 > grid.max_m() || alpha > grid.max_k()) {
    std::ostringstream msg;
    msg << "grid " << grid.nx << "x" << grid.ny << " cannot hold mode ("
        << n + 2 << ", " << alpha << ") inside the dealiased region";
    throw parameter_error(msg.str());
  }
}

}  // namespace

void AnsatzParams::validate() const {
  if (!(std::abs(theta) <= 1.0)) throw parameter_error("AnsatzParams: |theta| must be <= 1");
  if (!(sigma >= 2.0)) throw parameter_error("AnsatzParams: sigma must be >= 2");
}

PhaseTriple phases(const AdmissibleIndex& idx) {
  const long long n = idx.n_ll();
  const long long alpha = idx.alpha_ll();
  if (n < 2) throw parameter_error("phases: need n >= 2");
  PhaseTriple tr;
  tr.phi1 = {1, 0, omega({1, 0})};
  tr.phin = {n, alpha, omega({n, alpha})};
  tr.phinp1 = {n + 1, alpha, omega({n + 1, alpha})};
  // The beat mechanism rests on this exact identity.
  if (tr.phinp1.omega_val != tr.phi1.omega_val + tr.phin.omega_val) {
    throw parameter_error("phases: omega(n+1) != omega(1) + omega(n); index not admissible");
  }
  return tr;
}

std::vector<ExplicitMode> explicit_modes(const AnsatzParams& p) {
  p.validate();
  const long long n = p.idx.n_ll();
  const long long alpha = p.idx.alpha_ll();
  const PhaseTriple tr = phases(p.idx);
  const double ns = std::pow(static_cast<double>(n), -p.sigma);

  const Rational omega_minus = omega({n - 1, alpha});
  const Rational omega_plus2 = omega({n + 2, alpha});
  const Rational freq_low = tr.phin.omega_val - 1;    // drives (n-1, alpha)
  const Rational freq_high = tr.phinp1.omega_val + 1; // drives (n+2, alpha)
  const Rational gap_low = freq_low - omega_minus;    // = -Omega_{n-1}
  const Rational gap_high = freq_high - omega_plus2;  // = -Omega_{n+1}

  const double inv_low = to_double(Rational(Rational(1) / gap_low));
  const double inv_high = to_double(Rational(Rational(1) / gap_high));
  const double r_amp = 0.5 * p.theta * ns;

  std::vector<ExplicitMode> modes;
  modes.push_back({n, alpha, ns, Envelope::CosHalf, Carrier::Cos,
                   tr.phin.omega_val, Rational(0)});
  modes.push_back({n + 1, alpha, ns, Envelope::SinHalf, Carrier::Sin,
                   tr.phinp1.omega_val, Rational(0)});
  if (!p.with_corrector) return modes;
  // Detuned correctors: the products of the low mode with the beating pair
  // force (n-1, alpha) and (n+2, alpha) off resonance; dividing by the gap
  // keeps them a factor ~30 n^3 smaller.
  modes.push_back({n - 1, alpha, -r_amp * inv_low, Envelope::CosHalf, Carrier::Cos,
                   freq_low, gap_low});
  modes.push_back({n + 2, alpha, -r_amp * inv_high, Envelope::SinHalf, Carrier::Sin,
                   freq_high, gap_high});
  // Free counter-wave cancelling the corrector at t = 0, so the initial data
  // is exactly theta/n cos x + n^{-sigma} cos(n x + lambda alpha y).
  modes.push_back({n - 1, alpha, r_amp * inv_low, Envelope::One, Carrier::Cos,
                   omega_minus, Rational(0)});
  return modes;
}

std::complex<double> mode_coefficient(const ExplicitMode& mode, double theta, double t) {
  check_phase_budget(mode.freq, t);
  return mode.amp * envelope_value(mode.env, theta, t) * carrier_coefficient(mode, t);
}

std::complex<double> mode_defect_coefficient(const ExplicitMode& mode, double theta,
                                             double t) {
  check_phase_budget(mode.freq, t);
  // (d/dt - L) acting on amp * env * carrier: the carrier rotation contributes
  // i*(freq - omega) = i*detuning, the envelope its own slope.
  const std::complex<double> factor(envelope_slope(mode.env, theta, t),
                                    to_double(mode.detuning) *
                                        envelope_value(mode.env, theta, t));
  return mode.amp * factor * carrier_coefficient(mode, t);
}

SpectralField explicit_part(const AnsatzParams& p, double t, const TorusGrid& grid) {
  require_modes_resolved(p, grid);
  SpectralField out(grid);
  add_modes(out, p, t, false);
  return out;
}

SpectralField explicit_defect(const AnsatzParams& p, double t, const TorusGrid& grid) {
  require_modes_resolved(p, grid);
  SpectralField out(grid);
  add_modes(out, p, t, true);
  return out;
}

SpectralField build_ansatz(const AnsatzParams& p, double t, const Trajectory1D& lowfreq,
                           const TorusGrid& grid) {
  require_modes_resolved(p, grid);
  const Line& u1 = lowfreq.state_at(t);
  if (u1.nx != grid.nx) {
    throw parameter_error("build_ansatz: low-frequency line resolution must match grid nx");
  }
  SpectralField out = embed_1d(u1, grid);
  add_modes(out, p, t, false);
  return out;
}

double residual(const AnsatzParams& p, double t, const Trajectory1D& lowfreq,
                const TorusGrid& grid) {
  require_modes_resolved(p, grid);
  const long long n = p.idx.n_ll();
  const long long alpha = p.idx.alpha_ll();
  if (grid.max_m() < 2 * (n + 2) || grid.max_k() < 2 * alpha) {
    throw parameter_error(
        "residual: grid cannot hold the pairwise mode products exactly; "
        "use TorusGrid::product_exact_for");
  }
  const Line& u1_line = lowfreq.state_at(t);
  if (u1_line.nx != grid.nx) {
    throw parameter_error("residual: low-frequency line resolution must match grid nx");
  }

  SpectralField w = explicit_part(p, t, grid);
  SpectralField g = explicit_defect(p, t, grid);  // (d/dt - L) w
  SpectralField u1 = embed_1d(u1_line, grid);

  // Nonlinear defect relative to the low-frequency flow's own equation:
  // u du/dx - u1 du1/dx = -(N(u1 + w) - N(u1)) with the shared dealias mask,
  // so the embedded 1D dynamics cancels exactly and only the coupling of w
  // remains.
  Workspace2D ws(grid);
  SpectralField total = u1;
  total += w;
  SpectralField nl_total(grid), nl_low(grid);
  ws.nonlinear_term(total, nl_total);
  ws.nonlinear_term(u1, nl_low);
  g -= nl_total;
  g += nl_low;
  return l2_norm(g);
}

double lowfreq_free_wave_gap(double theta, const AdmissibleIndex& idx, double t) {
  if (!(std::abs(theta) <= 1.0)) throw parameter_error("lowfreq_free_wave_gap: |theta| <= 1");
  if (!(t >= 0.0 && t <= 1.0)) throw parameter_error("lowfreq_free_wave_gap: t in [0,1]");
  const long long n = idx.n_ll();
  const int nx = 64;
  const double dt = 1e-3;
  const long long steps = std::llround(t / dt);
  if (std::abs(steps * dt - t) > 1e-9) {
    throw parameter_error("lowfreq_free_wave_gap: t must be a multiple of 1e-3");
  }
  Line u0(nx);
  u0.add_cos(1, theta / static_cast<double>(n));
  Trajectory1D traj = evolve_1d_kdv5(u0, dt, t);
  Line linear(nx);
  linear.add_cos(1, theta / static_cast<double>(n), t);  // theta/n cos(x + t)
  return line_l2(traj.states.back() - linear);
}

}  // namespace kp5
