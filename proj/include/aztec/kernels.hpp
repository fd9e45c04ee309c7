#pragma once

#include <string>

#include "aztec/phases.hpp"
#include "aztec/quadrature.hpp"

namespace aztec {

// block(i, j) = K((m, 2 xi + i); (m', 2 xi' + j)), the true correlation
// kernel. The matrix in the usual contour formula is its transpose.
struct KernelBlock {
  Mat2c value = Mat2c::Zero();
  double error = 0.0;
  int nodes = 0;        // quadrature nodes per contour (0 for residues)
  int bits = 0;         // working precision of the residue route
  std::string method;
};

enum class FiniteMethod { Quadrature, Residue, Auto };
// Auto uses double quadrature up to this diamond size, residues beyond
inline constexpr int kQuadratureMaxSize = 8;

struct FiniteContours {
  double r1 = 0.4; // gamma_1 = circle(1, r1)
  double R = 2.5;  // gamma_{0,1} = circle(0, R), R > 1 + r1
};

KernelBlock finite_kernel(const WeightSpec &s, int N, int m, int xi, int mp, int xip,
                          double tol = 1e-8, FiniteMethod method = FiniteMethod::Auto,
                          const FiniteContours &c = {});

// Residue evaluation at a fixed working precision; bits <= 53 runs in double.
// Returns the displayed (untransposed) matrix.
Mat2c finite_kernel_residue(const WeightSpec &s, int N, int m, int xi, int mp, int xip,
                            int bits);

// Phi(z)^p as rho1^p P1 + rho2^p P2 with logs combined before exponentiation;
// `scale` is added to the log of both terms.
Mat2c balanced_power(const EigenSystem &e, int p, cd scale_log = 0.0);

// (1/2 pi i) contour integral of Phi^d z^{q} dz/z over circle(0, R), d >= 0
// or d < 0, by direct matrix powers.
KernelBlock phi_power_moment(const WeightSpec &s, int d, int q, double R, double tol);

// gamma_ell: circle through the midpoint of band ell and the point c > 1.
Contour smooth_contour(const SpectralData &sd, int ell, double c = 2.0);

KernelBlock smooth_kernel(const SpectralData &sd, int ell, int kappa, int zeta, int kappap,
                          int zetap, double tol = 1e-9, double c = 2.0);

// Arc from conj(z1) through b > 1 to z1 on a circle centred on the real axis.
Contour rough_arc(cd z1, double b = 0.0);

KernelBlock rough_kernel(const SpectralData &sd, double chi, double eta, int kappa, int zeta,
                         int kappap, int zetap, double tol = 1e-9);

enum class SineGauge { True, Printed };

// gauge(x)/gauge(y) S_theta(x, y), S_theta(x, y) = sin(theta (x-y)/2)/(pi (x-y)).
// True: gauge(x) = u^{-x/2}; Printed: gauge(x) = (-u^{1/2})^x.
cd sine_reference(double theta, double u, int x, int y, SineGauge g = SineGauge::True);

} // namespace aztec
