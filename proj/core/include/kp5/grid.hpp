#pragma once

#include "kp5/numtheory.hpp"

namespace kp5 {

// Rectangular torus [0, 2pi) x [0, 2pi/lambda), lambda = sqrt(35), sampled on
// an nx x ny grid. Spectral data lives on the half-spectrum m in [0, nx/2],
// k in (-ny/2, ny/2]; the other half is implied by the real-field symmetry.
struct TorusGrid {
  int nx = 32;
  int ny = 32;
  double lambda = 5.916079783099616;  // sqrt(35)
  int dealias_num = 2;                // retained fraction of each axis, as a ratio
  int dealias_den = 3;

  void validate() const;  // powers of two, >= 8

  int max_m() const { return (nx / 2) * dealias_num / dealias_den; }
  int max_k() const { return (ny / 2) * dealias_num / dealias_den; }
  bool in_mask(int m, int k) const;

  double dx() const;
  double dy() const;
  double area() const;  // 4 pi^2 / lambda

  bool operator==(const TorusGrid&) const = default;

  // Evolution sizing rule: nx >= next pow2 >= 8(n+2), ny >= next pow2 >= 4*alpha_index.
  static TorusGrid sized_for(const AdmissibleIndex& idx);
  // Enlargement of sized_for under which every pairwise product of ansatz
  // modes stays strictly inside the dealiased region.
  static TorusGrid product_exact_for(const AdmissibleIndex& idx);
};

int next_pow2(long long v);

}  // namespace kp5
