#include "aztec/height.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aztec/kernels.hpp"

namespace aztec {

namespace {

constexpr double kAxisTol = 1e-12;

// rho on the given sheet; on a cut rho2(x - i0) = rho1(x + i0), which is what
// eigen returns as rho1 there, so the surface is glued continuously at chi = 0
cd sheet_rho(const SpectralData &sd, cd z, int sheet) {
  const EigenSystem e = eigen(sd, z);
  return sheet == 1 || z.imag() == 0.0 ? e.rho1 : e.rho2;
}

// -(1/(pi i k)) times the integral of F1' along the arc from conj(z1) to z1
HeightValue rough_positive(const SpectralData &sd, double chi, double eta, double tol) {
  const PhasePoint pp = classify(sd, chi, eta);
  if (pp.label != Region::Rough) throw Error(Errc::NotRough, "point is " + pp.tag());
  const Contour arc = rough_arc(pp.z1);
  const auto r = contour_integrate<cd>(
      [&](cd z) { return f_prime(sd, 1, chi, eta, z); }, arc, tol);
  const cd h = -r.value / (cd(0.0, 1.0) * kPi * double(sd.k()));
  HeightValue out;
  out.value = h.real();
  out.imag = h.imag();
  out.label = Region::Rough;
  out.z1 = pp.z1;
  out.nodes = r.nodes;
  return out;
}

} // namespace

int smooth_slope_count(const SpectralData &sd, int ell) {
  if (ell < 1 || ell > static_cast<int>(sd.bands.size()))
    throw Error(Errc::NotSmooth, "no band " + std::to_string(ell));
  const double top = sd.bands[ell - 1].hi;
  const double slack = 1e-9 * std::max(1.0, std::abs(top));
  int c = 0;
  for (double s : sd.roots)
    if (s >= top - slack) ++c;
  if (c % 2 != 0) throw Error(Errc::OrderingViolation, "odd root count above a band");
  return c / 2;
}

HeightValue height_query(const SpectralData &sd, double chi, double eta, double tol) {
  const PhasePoint pp = classify(sd, chi, eta);
  const double k = sd.k();
  HeightValue out;
  out.label = pp.label;
  out.ell = pp.ell;
  switch (pp.label) {
  case Region::Smooth:
  case Region::BoundaryRS:
    out.value = -0.5 * (eta - 1.0) + chi / k * (smooth_slope_count(sd, pp.ell) - k);
    return out;
  case Region::Rough:
    break;
  default:
    throw Error(Errc::UnsupportedRegion, "height limit is not implemented at " + pp.tag());
  }
  if (std::abs(chi) <= kAxisTol) {
    // both reflections agree on the axis
    out.value = 0.5 * (1.0 - eta);
    out.z1 = pp.z1;
    return out;
  }
  if (chi > 0) return rough_positive(sd, chi, eta, tol);
  HeightValue r = rough_positive(sd, -chi, eta, tol);
  r.value = 1.0 - eta - r.value;
  r.z1 = pp.z1;
  return r;
}

double height_limit(const SpectralData &sd, double chi, double eta, double tol) {
  return height_query(sd, chi, eta, tol).value;
}

std::array<double, 2> height_gradient(const SpectralData &sd, double chi, double eta) {
  // Read at |chi| on the first sheet: z1 in the closed upper half plane, and
  // arg rho1 continued along the arc from the real point b > 1 (rho1(b) > 0).
  const auto [z1, sheet] = l_map(sd, std::abs(chi), eta);
  const cd zu = sheet == 1 ? z1 : std::conj(z1);
  const Contour full = rough_arc(zu);
  const Contour half = Contour::arc(full.center, full.radius, 0.0, full.t1);
  const auto r = contour_integrate<cd>([&](cd z) { return log_derivative_rho1(sd, z); }, half, 1e-12);
  const double gx = r.value.imag() / kPi;
  const double gy = -std::arg(zu) / kPi;
  if (chi >= 0) return {gx, gy};
  // h(chi, eta) = 1 - eta - h(-chi, eta) with eta = 2y
  return {gx, -2.0 - gy};
}

BurgersSample burgers_residual(const SpectralData &sd, double chi, double eta, double step) {
  const double k = sd.k();
  const auto [z1, sheet] = l_map(sd, chi, eta);
  auto at = [&](double c, double e) {
    const PhasePoint pp = classify(sd, c, e);
    if (pp.label != Region::Rough)
      throw Error(Errc::NeighborhoodLeavesRough, "difference stencil leaves the rough region");
    return std::pair<cd, cd>{pp.z1, sheet_rho(sd, pp.z1, pp.sheet)};
  };
  // x = chi / k, y = eta / 2
  const auto xp = at(chi + k * step, eta), xm = at(chi - k * step, eta);
  const auto yp = at(chi, eta + 2 * step), ym = at(chi, eta - 2 * step);
  BurgersSample b;
  b.g = z1;
  b.f = sheet_rho(sd, z1, sheet);
  const cd gx = (xp.first - xm.first) / (2 * step);
  const cd fy = (yp.second - ym.second) / (2 * step);
  b.residual = std::abs(b.f * gx + b.g * fy);
  const Mat2c A = phi<double>(sd.spec, b.g) - b.f * Mat2c::Identity();
  b.det_residual = std::abs(A.determinant());
  return b;
}

int winding_number(const SpectralData &sd, const Contour &c, double tol) {
  const auto r = contour_integrate<cd>([&](cd z) { return log_derivative_rho1(sd, z); }, c, tol);
  const cd w = r.value / (cd(0.0, 2.0) * kPi);
  const double n = std::round(w.real());
  if (std::abs(w - cd(n)) > 0.01)
    throw Error(Errc::NonIntegerWinding, "winding " + std::to_string(w.real()) + "+" +
                                             std::to_string(w.imag()) + "i is not an integer");
  return static_cast<int>(n);
}

std::vector<Contour> cut_contours(const SpectralData &sd) {
  std::vector<Contour> out;
  for (const Interval &c : sd.cuts) {
    if (!std::isfinite(c.lo)) continue;
    // keep a margin from neighbouring cuts and from the pole at 1
    double gap = 1.0 - c.hi;
    for (const Interval &o : sd.cuts) {
      if (&o == &c) continue;
      if (o.hi < c.lo) gap = std::min(gap, c.lo - o.hi);
      if (o.lo > c.hi) gap = std::min(gap, o.lo - c.hi);
    }
    const double mid = 0.5 * (c.lo + c.hi), half = 0.5 * (c.hi - c.lo);
    out.push_back(Contour::circle(mid, half + 0.3 * gap));
  }
  return out;
}

Contour pole_contour(const SpectralData &sd) {
  double r = 0.2;
  for (const Interval &c : sd.cuts) r = std::min(r, 0.5 * (1.0 - c.hi));
  return Contour::circle(1.0, r);
}

} // namespace aztec
