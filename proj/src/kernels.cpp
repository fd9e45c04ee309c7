#include "aztec/kernels.hpp"

#include <cmath>
#include <limits>

namespace aztec {

namespace {

void check_indices(const WeightSpec &s, int N, int m, int xi, int mp, int xip) {
  const DiamondGeometry g = geometry(s, N);
  if (!g.in_range(m, xi) || !g.in_range(mp, xip))
    throw Error(Errc::IndexOutOfRange,
                "need 0 < m, m' < N and -kN/2 <= xi, xi' <= -1; got (" + std::to_string(m) +
                    "," + std::to_string(xi) + ";" + std::to_string(mp) + "," +
                    std::to_string(xip) + ")");
}

Mat2c naive_power(Mat2c P, int d) {
  if (d < 0) {
    P = P.inverse().eval();
    d = -d;
  }
  Mat2c r = Mat2c::Identity();
  for (int i = 0; i < d; ++i) r = r * P;
  return r;
}

const cd kTwoPiI(0.0, 2.0 * kPi);

// trapezoidal double integral of the finite kernel at L nodes per circle;
// `mass` receives the sum of term magnitudes, which sets the rounding floor
Mat2c finite_double_sum(const WeightSpec &s, int N, int m, int xi, int mp, int xip,
                        const FiniteContours &c, int L, double &mass) {
  const int n = s.k * N / 2, e = m - N / 2, ep = N / 2 - mp;
  std::vector<Mat2c> A(L), B(L);
  std::vector<cd> w(L), z(L);
  for (int i = 0; i < L; ++i) {
    const cd u = std::polar(1.0, 2 * kPi * i / L);
    w[i] = 1.0 + c.r1 * u;
    const EigenSystem ew = eigen_direct(s, w[i]);
    const cd lw = double(xip) * std::log(w[i]) - double(n) * std::log(1.0 - 1.0 / w[i]);
    const cd dw = cd(0, 1) * c.r1 * u * (2 * kPi / L);
    A[i] = std::exp(lw + double(ep) * std::log(ew.rho1)) * ew.proj1 * dw;

    z[i] = c.R * u;
    const EigenSystem ez = eigen_direct(s, z[i]);
    const cd lz = double(-xi - 1) * std::log(z[i]) + double(n) * std::log(1.0 - 1.0 / z[i]);
    const cd dz = cd(0, 1) * z[i] * (2 * kPi / L);
    B[i] = balanced_power(ez, e, lz) * dz;
  }
  Mat2c K = Mat2c::Zero();
  std::vector<double> b_abs(L);
  for (int j = 0; j < L; ++j) b_abs[j] = B[j].cwiseAbs().maxCoeff();
  mass = 0;
  for (int i = 0; i < L; ++i) {
    Mat2c row = Mat2c::Zero();
    double row_mass = 0;
    for (int j = 0; j < L; ++j) {
      const cd inv = 1.0 / (z[j] - w[i]);
      row += B[j] * inv;
      row_mass += b_abs[j] * std::abs(inv);
    }
    K += A[i] * row;
    mass += A[i].cwiseAbs().maxCoeff() * row_mass;
  }
  mass /= 4 * kPi * kPi;
  return K / (kTwoPiI * kTwoPiI);
}

KernelBlock finite_quadrature(const WeightSpec &s, int N, int m, int xi, int mp, int xip,
                              double tol, const FiniteContours &c) {
  if (!(c.r1 > 0 && c.r1 < 1 && c.R > 1 + c.r1))
    throw Error(Errc::OutOfRange, "contours need 0 < r1 < 1 and R > 1 + r1");
  constexpr int kDoubleCap = 1 << 12;
  KernelBlock kb;
  kb.method = "quadrature";
  Mat2c first = Mat2c::Zero();
  double first_err = 0;
  if (m > mp) {
    const KernelBlock f = phi_power_moment(s, m - mp, xip - xi, c.R, tol);
    first = -f.value;
    first_err = f.error;
  }
  int L = 32;
  double mass = 0;
  Mat2c prev = finite_double_sum(s, N, m, xi, mp, xip, c, L, mass);
  for (;;) {
    L *= 2;
    const Mat2c next = finite_double_sum(s, N, m, xi, mp, xip, c, L, mass);
    const double err = (next - prev).cwiseAbs().maxCoeff();
    // below the rounding floor further doubling cannot help; report the floor
    const double floor = 64 * std::numeric_limits<double>::epsilon() * mass;
    if (err <= std::max(tol * std::max(1.0, next.cwiseAbs().maxCoeff()), floor)) {
      kb.value = (first + next).transpose();
      kb.error = std::max(err, floor) + first_err;
      kb.nodes = L;
      return kb;
    }
    if (L >= kDoubleCap)
      throw Error(Errc::NoConvergence, "finite-kernel double integral did not settle");
    prev = next;
  }
}

KernelBlock finite_residue(const WeightSpec &s, int N, int m, int xi, int mp, int xip,
                           double tol) {
  // cancellation grows like the largest binomial factors, about 2kN bits
  int bits = 96 + 2 * s.k * N;
  constexpr int kMaxBits = 1 << 13;
  for (;;) {
    const Mat2c a = finite_kernel_residue(s, N, m, xi, mp, xip, bits);
    const Mat2c b = finite_kernel_residue(s, N, m, xi, mp, xip, bits + 64);
    const double diff = (a - b).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
    if (b.allFinite() && diff <= std::min(tol, 1e-13) * scale) {
      KernelBlock kb;
      kb.value = b.transpose();
      // both precisions round to the same doubles: the floor is one ulp
      kb.error = std::max(diff, std::numeric_limits<double>::epsilon() * scale);
      kb.bits = bits + 64;
      kb.method = "residue";
      return kb;
    }
    bits *= 2;
    if (bits > kMaxBits)
      throw Error(Errc::NoConvergence, "residue evaluation unstable up to 8192 bits");
  }
}

} // namespace

Mat2c balanced_power(const EigenSystem &e, int p, cd scale_log) {
  const cd l1 = scale_log + double(p) * std::log(e.rho1);
  const cd l2 = scale_log + double(p) * std::log(e.rho2);
  return std::exp(l1) * e.proj1 + std::exp(l2) * e.proj2;
}

KernelBlock phi_power_moment(const WeightSpec &s, int d, int q, double R, double tol) {
  auto f = [&](cd z) -> Mat2c {
    return naive_power(phi<double>(s, z), d) * (std::pow(z, q) / z);
  };
  const auto r = contour_integrate<Mat2c>(f, Contour::circle(0.0, R), tol);
  KernelBlock kb;
  kb.value = r.value / kTwoPiI;
  kb.error = r.error / (2 * kPi);
  kb.nodes = r.nodes;
  kb.method = "quadrature";
  return kb;
}

KernelBlock finite_kernel(const WeightSpec &s, int N, int m, int xi, int mp, int xip,
                          double tol, FiniteMethod method, const FiniteContours &c) {
  check_indices(s, N, m, xi, mp, xip);
  if (method == FiniteMethod::Auto)
    method = s.k * N <= kQuadratureMaxSize ? FiniteMethod::Quadrature : FiniteMethod::Residue;
  if (method == FiniteMethod::Quadrature) return finite_quadrature(s, N, m, xi, mp, xip, tol, c);
  return finite_residue(s, N, m, xi, mp, xip, tol);
}

Contour smooth_contour(const SpectralData &sd, int ell, double c) {
  if (sd.k_prime == 1) throw Error(Errc::NoSmoothRegion, "k' = 1: no smooth region");
  if (ell < 1 || ell > sd.k_prime - 1)
    throw Error(Errc::IndexOutOfRange, "band index " + std::to_string(ell));
  if (!(c > 1.0)) throw Error(Errc::OutOfRange, "smooth contour must cross (1, inf)");
  const Interval &I = sd.bands[ell - 1];
  const double mid = 0.5 * (I.lo + I.hi);
  return Contour::circle(0.5 * (mid + c), 0.5 * (c - mid));
}

KernelBlock smooth_kernel(const SpectralData &sd, int ell, int kappa, int zeta, int kappap,
                          int zetap, double tol, double c) {
  const Contour g = smooth_contour(sd, ell, c);
  const int d = kappa - kappap, q = zetap - zeta;
  const bool first = kappa <= kappap;
  auto f = [&](cd z) -> Mat2c {
    const EigenSystem e = eigen(sd, z);
    const cd lz = double(q - 1) * std::log(z);
    if (first) return std::exp(lz + double(d) * std::log(e.rho1)) * e.proj1;
    return -std::exp(lz + double(d) * std::log(e.rho2)) * e.proj2;
  };
  const auto r = contour_integrate<Mat2c>(f, g, tol);
  KernelBlock kb;
  kb.value = (r.value / kTwoPiI).transpose();
  kb.error = r.error / (2 * kPi);
  kb.nodes = r.nodes;
  kb.method = "smooth";
  return kb;
}

Contour rough_arc(cd z1, double b) {
  if (b <= 1.0) b = std::max(2.0, std::abs(z1) + 1.0);
  // centre x0 on the real axis with |z1 - x0| = b - x0
  const double x0 = (std::norm(z1) - b * b) / (2.0 * (z1.real() - b));
  const double r = b - x0;
  const cd rel = z1 - x0; // keeps the sign of a zero imaginary part
  const double th = std::atan2(rel.imag(), rel.real());
  return Contour::arc(x0, r, -th, th);
}

KernelBlock rough_kernel(const SpectralData &sd, double chi, double eta, int kappa, int zeta,
                         int kappap, int zetap, double tol) {
  const auto [z1, sheet] = l_map(sd, chi, eta);
  const int d = kappa - kappap, q = zetap - zeta;
  KernelBlock kb;
  kb.method = "rough";
  const int coef = (sheet == 2 ? 1 : 0) - (kappa > kappap ? 1 : 0);
  Mat2c closed = Mat2c::Zero();
  if (coef != 0) {
    const KernelBlock m = phi_power_moment(sd.spec, d, q, 2.5, tol);
    closed = double(coef) * m.value;
    kb.error += m.error;
  }
  auto f = [&](cd z) -> Mat2c {
    const EigenSystem e = eigen(sd, z);
    const cd lz = double(q - 1) * std::log(z);
    if (sheet == 1) return std::exp(lz + double(d) * std::log(e.rho1)) * e.proj1;
    return std::exp(lz + double(d) * std::log(e.rho2)) * e.proj2;
  };
  const auto r = contour_integrate<Mat2c>(f, rough_arc(z1), tol);
  kb.value = (closed + r.value / kTwoPiI).transpose();
  kb.error += r.error / (2 * kPi);
  kb.nodes = r.nodes;
  return kb;
}

cd sine_reference(double theta, double u, int x, int y, SineGauge g) {
  const int dxy = x - y;
  const double S = dxy == 0 ? theta / (2 * kPi) : std::sin(0.5 * theta * dxy) / (kPi * dxy);
  if (g == SineGauge::True) return std::pow(u, -0.5 * dxy) * S;
  return (dxy % 2 == 0 ? 1.0 : -1.0) * std::pow(u, 0.5 * dxy) * S;
}

} // namespace aztec
