#pragma once

#include <array>
#include <vector>

#include "aztec/phases.hpp"
#include "aztec/quadrature.hpp"

namespace aztec {

struct HeightValue {
  double value = 0;
  Region label = Region::Frozen;
  int ell = 0;
  cd z1 = 0.0;       // rough points only
  double imag = 0;   // imaginary part left by the rough contour integral
  int nodes = 0;
};

// n_ell = #{roots s_i of p with s_i >= x_{2 ell - 1}} / 2
int smooth_slope_count(const SpectralData &sd, int ell);

// Limit of (2/kN) E h at (chi, eta). Rough points with chi < 0 use
// h(chi, eta) = 1 - eta - h(-chi, eta); frozen points are rejected.
HeightValue height_query(const SpectralData &sd, double chi, double eta, double tol = 1e-11);
double height_limit(const SpectralData &sd, double chi, double eta, double tol = 1e-11);

// (d/dx, d/dy) of the limit with (chi, eta) = (kx, 2y): (arg f, -arg g) / pi
// with f = rho(z1) on the tagged sheet and g = z1. arg f is continued along
// the arc from its real point b > 1; chi < 0 goes through the reflection.
std::array<double, 2> height_gradient(const SpectralData &sd, double chi, double eta);

struct BurgersSample {
  cd f, g;
  double residual = 0;      // |f g_x + g f_y| by centered differences
  double det_residual = 0;  // |det(Phi(g) - f I)|
};

BurgersSample burgers_residual(const SpectralData &sd, double chi, double eta, double step);

// Rounded (1/2 pi i) contour integral of rho1'/rho1.
int winding_number(const SpectralData &sd, const Contour &c, double tol = 1e-10);

// Circles enclosing each bounded gap cut, and one around z = 1.
std::vector<Contour> cut_contours(const SpectralData &sd);
Contour pole_contour(const SpectralData &sd);

} // namespace aztec
