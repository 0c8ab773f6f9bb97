#pragma once

#include <complex>
#include <vector>

namespace kp5 {

class SpectralField;
struct TorusGrid;

// Real scalar field on the circle [0, 2pi), half-spectrum c[m], m in [0, nx/2].
struct Line {
  int nx = 0;
  std::vector<std::complex<double>> c;

  explicit Line(int nx_pts = 0);

  int max_mode() const { return nx / 2; }
  double mean() const { return c.empty() ? 0.0 : c[0].real(); }

  void add_cos(int m, double amp, double phase = 0.0);  // amp * cos(m x + phase)
  Line& operator-=(const Line& o);
};

Line operator-(const Line& a, const Line& b);

std::vector<double> line_to_physical(const Line& u);
Line line_from_physical(const std::vector<double>& samples);

double line_l2(const Line& u);                 // (2pi sum |c|^2)^(1/2)
double line_hs_norm(const Line& u, double s);  // weights (1 + m^2)^s
double line_max_abs(const Line& u);

// Spectral x-derivative of integer order >= -1 (order < 0 needs zero mean).
Line line_x_derivative(const Line& u, int order);

// Places the x-spectrum on the k = 0 row of a 2D field (constant in y).
SpectralField embed_1d(const Line& u, const TorusGrid& grid);

}  // namespace kp5
