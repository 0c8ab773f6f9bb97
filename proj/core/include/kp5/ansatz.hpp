#pragma once

#include <complex>
#include <vector>

#include "kp5/field.hpp"
#include "kp5/resonance.hpp"
#include "kp5/solver1d.hpp"

namespace kp5 {

struct AnsatzParams {
  double theta = 1.0;
  AdmissibleIndex idx;
  double sigma = 2.0;
  // Ablation switch: drops the detuned correctors and their counter-wave,
  // leaving only the beating pair. Used to show the correctors earn a power
  // of n in the residual.
  bool with_corrector = true;

  void validate() const;  // |theta| <= 1, sigma >= 2
};

// One of the linear phases m x + lambda k y + omega t with exact frequency.
struct PhaseSpec {
  long long m = 0;
  long long k = 0;
  Rational omega_val;
};

struct PhaseTriple {
  PhaseSpec phi1, phin, phinp1;
};

// phi_1, phi_n, phi_{n+1}; checks the exact additivity
// omega(n+1, alpha) = omega(1, 0) + omega(n, alpha) that makes the pair
// (n, alpha), (n+1, alpha) exchange energy through the low mode.
PhaseTriple phases(const AdmissibleIndex& idx);

enum class Envelope { One, CosHalf, SinHalf };  // 1, cos(theta t/2), sin(theta t/2)
enum class Carrier { Cos, Sin };

// amp * envelope(theta t / 2) * carrier(m x + lambda k y + freq t).
// detuning = freq - omega(m, lambda k), exactly zero on free carriers.
struct ExplicitMode {
  long long m = 0;
  long long k = 0;
  double amp = 0.0;
  Envelope env = Envelope::One;
  Carrier car = Carrier::Cos;
  Rational freq;
  Rational detuning;
};

// The five high-frequency constituents: the beating pair at (n, alpha) and
// (n+1, alpha), the detuned correctors at (n-1, alpha) and (n+2, alpha), and
// the free counter-wave that zeroes the corrector at t = 0.
std::vector<ExplicitMode> explicit_modes(const AnsatzParams& p);

// Spectral coefficient of one mode at (m, k) (the Hermitian partner is
// implied), and the coefficient of its linear defect (d/dt - L) in closed
// form. Throws parameter_error when |freq * t| exceeds the double-precision
// phase budget.
std::complex<double> mode_coefficient(const ExplicitMode& mode, double theta, double t);
std::complex<double> mode_defect_coefficient(const ExplicitMode& mode, double theta,
                                             double t);

// Sum of the explicit modes only (no low-frequency part).
SpectralField explicit_part(const AnsatzParams& p, double t, const TorusGrid& grid);

// (d/dt - L) of the explicit part, assembled analytically.
SpectralField explicit_defect(const AnsatzParams& p, double t, const TorusGrid& grid);

// The approximate solution: embedded low-frequency 1D flow plus the explicit
// modes. lowfreq must be the evolve_1d_kdv5 trajectory of theta/n cos(x) on a
// line with the grid's nx; t must be one of its step times.
SpectralField build_ansatz(const AnsatzParams& p, double t, const Trajectory1D& lowfreq,
                           const TorusGrid& grid);

// L2 norm of (d/dt - L)u + u du/dx for the approximate solution, with the
// low-frequency part eliminated through its own discrete equation. The grid
// must keep every pairwise product of explicit modes inside the dealias mask
// (TorusGrid::product_exact_for), else the value would depend on resolution.
double residual(const AnsatzParams& p, double t, const Trajectory1D& lowfreq,
                const TorusGrid& grid);

// || Phi_t[theta/n cos x] - theta/n cos(x + t) ||_{L2} on the circle: how far
// the low-frequency flow drifts from the free wave by time t.
double lowfreq_free_wave_gap(double theta, const AdmissibleIndex& idx, double t);

}  // namespace kp5
