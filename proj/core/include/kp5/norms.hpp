#pragma once

#include "kp5/field.hpp"
#include "kp5/transform.hpp"

namespace kp5 {

struct NormReport {
  double sigma = 2.0;
  double l2 = 0.0;
  double e2 = 0.0;           // (|u|^2 + |dx^2 u|^2 + |dx^-1 dy u|^2)^(1/2)
  double e_sigma = 0.0;      // adds |dx^sigma u|^2 and |dx^(sigma-3) dy u|^2 to |u|^2 ...
  double hamiltonian = 0.0;  // 1/2|dx^2 u|^2 + 1/2|dx^-1 dy u|^2 - 1/6 int u^3
};

double l2_norm(const SpectralField& u);

// Weighted seminorm ||dx^a dy^b u||_{L^2} with |m|^a (lambda k)^b multipliers.
// a may be negative or fractional; modes with m = 0 must then be absent.
double xy_seminorm(const SpectralField& u, double a, int b);

// Full report; the cubic term of the Hamiltonian integrates u^3 over the
// dealiased physical grid through the supplied workspace. Throws if the
// m = 0 column carries more than 1e-12 of the total energy.
NormReport norms(const SpectralField& u, double sigma, Workspace2D& ws);

// Quadrature of int u^3 dx dy on the grid.
double cubic_integral(const SpectralField& u, Workspace2D& ws);

}  // namespace kp5
