#include "aztec/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>

namespace aztec {

std::array<RPoly, 4> scaled_phi_polys(const WeightSpec &s) {
  std::array<RPoly, 4> m{RPoly::constant(1), RPoly(), RPoly(), RPoly::constant(1)};
  for (int j = 1; j <= s.k; ++j) {
    const double a = s.a(j), b = s.b(j), g = s.g(j);
    const std::array<RPoly, 4> f{RPoly({a / b, g}), RPoly::constant(g * b + a),
                                 RPoly({0.0, 1.0 / a + 1.0 / (g * b)}), RPoly({b / a, 1.0 / g})};
    m = {m[0] * f[0] + m[1] * f[2], m[0] * f[1] + m[1] * f[3], m[2] * f[0] + m[3] * f[2],
         m[2] * f[1] + m[3] * f[3]};
  }
  return m;
}

int SpectralData::band_of(double t) const {
  for (std::size_t l = 0; l < bands.size(); ++l)
    if (t > bands[l].lo && t < bands[l].hi) return static_cast<int>(l) + 1;
  return 0;
}

bool SpectralData::on_cut(double t) const {
  for (const Interval &c : cuts)
    if (t >= c.lo && t <= c.hi) return true;
  return false;
}

SpectralData discriminant(const WeightSpec &s) {
  require_standard(s);
  const int k = s.k;
  SpectralData sd;
  sd.spec = s;
  const auto m = scaled_phi_polys(s);
  sd.trace_poly = m[0] + m[3];
  const RPoly c2k = RPoly::linear_power(1.0, 2 * k) * 4.0;
  const RPoly ck = RPoly::linear_power(1.0, k) * 2.0;
  sd.p_plus = sd.trace_poly + ck;
  sd.p_minus = sd.trace_poly - ck;
  // z^{2k} cancels exactly; p(0) = 0 exactly since T(0) = 2
  RPoly::Coeffs pc = (sd.trace_poly * sd.trace_poly - c2k).coeffs();
  pc.conservativeResize(2 * k);
  pc(0) = 0.0;
  sd.p = RPoly(pc);

  // p = z * r with deg r = 2k-2; roots of r come in ordered pairs
  const RPoly r(RPoly::Coeffs(pc.tail(2 * k - 1)));
  std::vector<cd> zr = poly_roots(r);
  for (const cd &z : zr)
    if (std::abs(z.imag()) > 1e-7 * (1.0 + std::abs(z)))
      throw Error(Errc::RootImagTooLarge,
                  "root " + std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i");
  std::vector<double> rr;
  for (const cd &z : zr) rr.push_back(z.real());
  std::sort(rr.begin(), rr.end(), std::greater<>());

  sd.roots.push_back(0.0);
  sd.x.push_back(0.0);
  std::vector<double> doubles;
  if (!rr.empty() && rr.front() >= 0.0)
    throw Error(Errc::OrderingViolation, "nonzero root of p is not negative");
  const auto close = [&](double u, double v) {
    return std::abs(u - v) <= kClusterTol * (1.0 + std::abs(u) + std::abs(v));
  };
  for (std::size_t i = 0; i + 1 < rr.size(); i += 2) {
    const double u = rr[i], v = rr[i + 1];
    // the pair (s_{2i+1}, s_{2i+2}) must be separated from the next pair
    if (i + 2 < rr.size() && close(v, rr[i + 2]))
      throw Error(Errc::OrderingViolation, "roots of p cluster across a strict gap");
    if (close(u, v)) {
      // a double root of p is a simple root of p'
      const double mid = newton_polish(sd.p.derivative(), cd(0.5 * (u + v))).real();
      doubles.push_back(mid);
      sd.roots.push_back(mid);
      sd.roots.push_back(mid);
    } else {
      sd.roots.push_back(u);
      sd.roots.push_back(v);
      sd.x.push_back(u);
      sd.x.push_back(v);
    }
  }
  sd.k_prime = (static_cast<int>(sd.x.size()) + 1) / 2;

  sd.q = RPoly::constant(1.0);
  for (double d : doubles) sd.q = sd.q * RPoly({-d, 1.0});
  const auto [p0, rem] = RPoly::divmod(sd.p, sd.q * sd.q);
  if (rem.scale() > 1e-9 * sd.p.scale())
    throw Error(Errc::DivisionResidual, "q^2 does not divide p");
  sd.p0 = p0;
  const RPoly back = sd.q * sd.q * sd.p0 - sd.p;
  if (back.scale() > 1e-9 * sd.p.scale())
    throw Error(Errc::DivisionResidual, "q^2 p0 differs from p");

  const RPoly num = RPoly({-1.0, 1.0}) * sd.trace_poly.derivative() - sd.trace_poly * double(k);
  const auto [dn, drem] = RPoly::divmod(num, sd.q);
  if (drem.scale() > 1e-8 * std::max(1.0, num.scale()))
    throw Error(Errc::DivisionResidual, "q does not divide (z-1)T' - kT");
  sd.dn = dn;

  const int kp = sd.k_prime;
  for (int l = 1; l < kp; ++l) sd.bands.push_back({sd.x[2 * l], sd.x[2 * l - 1]});
  for (int l = 0; l < kp - 1; ++l) sd.cuts.push_back({sd.x[2 * l + 1], sd.x[2 * l]});
  sd.cuts.push_back({-std::numeric_limits<double>::infinity(), sd.x[2 * kp - 2]});
  return sd;
}

cd p0_sqrt(const SpectralData &sd, cd z) {
  if (z.imag() == 0.0) z = cd(z.real(), 0.0); // -0.0 would select the lower limit
  cd acc = std::sqrt(sd.p0.leading());
  for (double x : sd.x) acc *= std::sqrt(z - x);
  return acc;
}

namespace {

EigenSystem finish(cd z, cd r1, cd r2, const Mat2c &P, bool swapped) {
  if (std::abs(r1 - r2) < 1e-12 * (std::abs(r1) + std::abs(r2)))
    throw Error(Errc::DegenerateSpectrum, "coalescing eigenvalues");
  EigenSystem e;
  e.z = z;
  e.rho1 = r1;
  e.rho2 = r2;
  e.proj1 = (P - r2 * Mat2c::Identity()) / (r1 - r2);
  e.proj2 = Mat2c::Identity() - e.proj1;
  e.swapped = swapped;
  return e;
}

// picks the larger of T +- s, ties going to T + s
bool use_minus(cd a, cd b) { return std::abs(b) > std::abs(a) * (1.0 + 1e-12); }

} // namespace

EigenSystem eigen(const SpectralData &sd, cd z) {
  const Mat2c P = phi<double>(sd.spec, z);
  const cd T = sd.trace_poly(z);
  const cd c = std::pow(z - 1.0, sd.k());
  const cd sq = sd.q(z) * p0_sqrt(sd, z);
  const cd a = T + sq, b = T - sq;
  // a b = 4 c^2, so the smaller eigenvalue comes from the larger factor
  if (use_minus(a, b)) return finish(z, b / (2.0 * c), 2.0 * c / b, P, true);
  return finish(z, a / (2.0 * c), 2.0 * c / a, P, false);
}

EigenSystem eigen_direct(const WeightSpec &s, cd z) {
  const Mat2c P = phi<double>(s, z);
  const cd tr = P.trace(), det = P.determinant();
  const cd d = std::sqrt(tr * tr - 4.0 * det);
  cd big = 0.5 * (tr + d);
  if (std::abs(tr - d) > std::abs(tr + d)) big = 0.5 * (tr - d);
  return finish(z, big, det / big, P, false);
}

cd log_derivative_rho1(const SpectralData &sd, cd z) {
  const cd T = sd.trace_poly(z);
  const cd sq = sd.q(z) * p0_sqrt(sd, z);
  const cd base = sd.dn(z) / ((z - 1.0) * p0_sqrt(sd, z));
  return use_minus(T + sq, T - sq) ? -base : base;
}

cd kasteleyn_charpoly(const WeightSpec &s, cd z, cd lambda) {
  const int k = s.k;
  Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(2 * k, 2 * k);
  for (int j = 1; j <= k; ++j) {
    const int o = 2 * (j - 1);
    const double a = s.a(j), b = s.b(j);
    K.block<2, 2>(o, o) << -1.0 / a, 1.0, z, -a;
    Mat2c B;
    B << 1.0 / b, 1.0, z, b;
    if (j < k) K.block<2, 2>(o + 2, o) += B;
    else K.block<2, 2>(0, o) += lambda * B;
  }
  return K.determinant();
}

SwitchResult wiener_hopf_switch(double a, double b, double c, double al, double be,
                                double ga, cd z) {
  const double den = a * c + ga / al;
  if (den == 0.0) throw Error(Errc::ZeroDenominator, "a c + gamma/alpha = 0");
  if (z == 0.0) throw Error(Errc::PoleAtZ, "switching at z = 0");
  SwitchResult r;
  r.x = (a * be + b / al) / den;
  const double x = r.x.real();
  r.left_a << a, b / z, c, 1.0 / a;
  r.left_b << al, be / z, ga, 1.0 / al;
  r.right_a << a, ga * x / z, be / x, 1.0 / a;
  r.right_b << al, c * x / z, b / x, 1.0 / al;
  r.lhs = r.left_a * r.left_b;
  r.rhs = r.right_a * r.right_b;
  r.residual = (r.lhs - r.rhs).cwiseAbs().maxCoeff();
  return r;
}

} // namespace aztec
