#include "aztec/phases.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace aztec {

const char *region_name(Region r) {
  switch (r) {
  case Region::Frozen: return "frozen";
  case Region::Rough: return "rough";
  case Region::Smooth: return "smooth";
  case Region::BoundaryFR: return "boundary_fr";
  case Region::BoundaryRS: return "boundary_rs";
  }
  return "?";
}

std::string PhasePoint::tag() const {
  std::string s = region_name(label);
  if (label == Region::Smooth || label == Region::BoundaryRS) s += std::to_string(ell);
  return s;
}

RPoly critical_polynomial(const SpectralData &sd, double chi, double eta) {
  const int k = sd.k();
  // p0 vanishes at 0; drop the (numerically tiny) constant term
  const RPoly::Coeffs &c = sd.p0.coeffs();
  const RPoly p0z(RPoly::Coeffs(c.tail(c.size() - 1)));
  const RPoly lin({-(eta + 1.0), eta - 1.0});
  const RPoly P = p0z * lin * lin * double(k * k) -
                  RPoly({0.0, 4.0 * chi * chi}) * sd.dn * sd.dn;
  if (P.degree() != 2 * sd.k_prime ||
      std::abs(P.leading()) <= 1e-14 * P.scale())
    throw Error(Errc::DegreeCollapse, "critical polynomial lost its leading term");
  return P;
}

cd f_prime(const SpectralData &sd, int sheet, double chi, double eta, cd z) {
  const double k = sd.k();
  const cd lr = log_derivative_rho1(sd, z);
  const cd base = 0.25 * k * (eta + 1.0) / z - 0.5 * k / (z - 1.0);
  return sheet == 1 ? base - 0.5 * chi * lr : base + 0.5 * chi * lr;
}

namespace {

bool coalesce(cd a, cd b) { return std::abs(a - b) <= kCoalesceTol * (1.0 + std::abs(a)); }

bool nearly_real(cd z, double tol) { return std::abs(z.imag()) <= tol * (1.0 + std::abs(z)); }

[[noreturn]] void unclassifiable(double chi, double eta, const std::string &why) {
  throw Error(Errc::UnclassifiablePoint, "(" + std::to_string(chi) + ", " +
                                             std::to_string(eta) + "): " + why);
}

} // namespace

PhasePoint classify(const SpectralData &sd, double chi, double eta) {
  if (!(chi > -1.0 && chi < 1.0 && eta > -1.0 && eta < 1.0))
    throw Error(Errc::OutOfRange, "(chi, eta) must lie in (-1,1)^2");
  PhasePoint pp;
  pp.chi = chi;
  pp.eta = eta;
  pp.critical_roots = poly_roots(critical_polynomial(sd, chi, eta));
  const int nb = static_cast<int>(sd.bands.size());
  const double slack = 1e-9;

  std::vector<std::vector<cd>> in_band(nb + 1);
  std::vector<cd> rest;
  for (const cd &r : pp.critical_roots) {
    int l = 0;
    if (nearly_real(r, 1e-7)) {
      for (int b = 1; b <= nb; ++b) {
        const Interval &I = sd.bands[b - 1];
        const double pad = slack * (1.0 + std::abs(r.real()));
        if (r.real() >= I.lo - pad && r.real() <= I.hi + pad) l = b;
      }
    }
    if (l > 0) in_band[l].push_back(r);
    else rest.push_back(r);
  }
  int total = 0;
  for (int b = 1; b <= nb; ++b) {
    if (in_band[b].size() < 2) unclassifiable(chi, eta, "band with fewer than two roots");
    total += static_cast<int>(in_band[b].size());
  }

  // at chi = 0 the distinguished pair is the double root (eta+1)/(eta-1)
  const bool axis = std::abs(chi) <= 1e-12;

  if (total == 2 * sd.k_prime) {
    for (int b = 1; b <= nb; ++b) {
      if (in_band[b].size() != 4) continue;
      pp.ell = b;
      pp.label = Region::Smooth;
      if (!axis) {
        auto v = in_band[b];
        std::sort(v.begin(), v.end(), [](cd a, cd c) { return a.real() < c.real(); });
        for (int i = 0; i + 1 < 4; ++i)
          if (coalesce(v[i], v[i + 1])) pp.label = Region::BoundaryRS;
      }
      return pp;
    }
    unclassifiable(chi, eta, "extra band roots spread over several bands");
  }
  if (total != 2 * sd.k_prime - 2 || rest.size() != 2)
    unclassifiable(chi, eta, "root accounting failed");

  cd a = rest[0], b = rest[1];
  if (a.imag() < b.imag()) std::swap(a, b);
  const bool pair_real = nearly_real(a, kCoalesceTol) && nearly_real(b, kCoalesceTol);
  if (pair_real && (axis || coalesce(a, b))) {
    const double x = 0.5 * (a.real() + b.real());
    if (x > 0.0 && !axis) {
      pp.label = Region::BoundaryFR;
      return pp;
    }
    if (const int l = sd.band_of(x); l > 0) {
      pp.label = axis ? Region::Smooth : Region::BoundaryRS;
      pp.ell = l;
      return pp;
    }
    if (sd.on_cut(x) || axis) {
      // a real double root on a gap cut only occurs on the axis; it is the
      // boundary value of the rough pair, kept as x - i0 on sheet 2
      pp.label = Region::Rough;
      pp.z1 = cd(x, -0.0);
      pp.sheet = 2;
      return pp;
    }
    unclassifiable(chi, eta, "coalescing pair off the real structure");
  }
  if (!nearly_real(a, 1e-9) && std::abs(a - std::conj(b)) <= 1e-6 * (1.0 + std::abs(a))) {
    pp.label = Region::Rough;
    const cd f1 = f_prime(sd, 1, chi, eta, a), f2 = f_prime(sd, 2, chi, eta, a);
    if (std::abs(f1) <= std::abs(f2)) {
      pp.z1 = a;
      pp.sheet = 1;
    } else {
      pp.z1 = std::conj(a);
      pp.sheet = 2;
    }
    return pp;
  }
  if (nearly_real(a, 1e-7) && nearly_real(b, 1e-7) && a.real() > 0.0 && b.real() > 0.0) {
    pp.label = Region::Frozen;
    return pp;
  }
  unclassifiable(chi, eta, "distinguished pair is neither real positive nor conjugate");
}

std::pair<cd, int> l_map(const SpectralData &sd, double chi, double eta) {
  const PhasePoint pp = classify(sd, chi, eta);
  if (pp.label != Region::Rough)
    throw Error(Errc::NotRough, "point is " + pp.tag() + ", not rough");
  return {pp.z1, pp.sheet};
}

std::vector<LabeledPoint> special_points(const SpectralData &sd) {
  std::vector<LabeledPoint> out;
  for (std::size_t l = 1; l < sd.x.size(); ++l) {
    const double x = sd.x[l];
    out.push_back({"A" + std::to_string(l), {0.0, (x + 1.0) / (x - 1.0)}});
  }
  out.push_back({"B1", {0.0, -1.0}});
  out.push_back({"B2", {0.0, 1.0}});
  const double c = 2.0 / sd.k() * sd.p.derivative()(1.0) / sd.p(1.0) - 1.0;
  out.push_back({"C+", {1.0, c}});
  out.push_back({"C-", {-1.0, c}});
  return out;
}

Point2 arctic_point(const SpectralData &sd, double z) {
  const double k = sd.k();
  const double p0 = sd.p0(z), dp0 = sd.p0.derivative()(z);
  const double s = std::sqrt(p0);
  const double dn = sd.dn(z), ddn = sd.dn.derivative()(z);
  // on I_0 and on the bands p0 > 0 and sqrt(p0) is the real continuation,
  // which is positive on I_0; its sign on a band only flips chi
  const double w = z - 1.0;
  const double g = z * dn / (w * s);
  const double gp = (dn + z * ddn) / (w * s) - z * dn / (w * w * s) - 0.5 * g * dp0 / p0;
  if (!std::isfinite(gp) || gp == 0.0)
    throw Error(Errc::DerivativeSingularity, "d/dz (z rho1'/rho1) vanished at " +
                                                 std::to_string(z));
  const double chi = k / (w * w * gp);
  const double eta = (2.0 * g / (w * gp) + z + 1.0) / w;
  return {chi, eta};
}

namespace {

Polyline sample_range(const SpectralData &sd, double lo, double hi, int n, bool invert) {
  // cosine spacing clusters samples at both square-root endpoints
  Polyline out;
  for (int j = 1; j < n; ++j) {
    const double u = 0.5 * (1.0 - std::cos(kPi * j / n));
    double z = lo + (hi - lo) * u;
    if (invert) z = 1.0 / z;
    out.push_back(arctic_point(sd, z));
  }
  return out;
}

void orient_positive(Polyline &p) {
  double acc = 0;
  for (const Point2 &q : p) acc += q.x;
  if (acc < 0)
    for (Point2 &q : p) q.x = -q.x;
}

Polyline mirrored_reversed(const Polyline &p) {
  Polyline out(p.rbegin(), p.rend());
  for (Point2 &q : out) q.x = -q.x;
  return out;
}

void append(Polyline &dst, const Polyline &src) { dst.insert(dst.end(), src.begin(), src.end()); }

} // namespace

ArcticCurves arctic_curves(const SpectralData &sd, int samples) {
  require_standard(sd.spec);
  if (samples < 16) throw Error(Errc::OutOfRange, "need at least 16 samples per curve");
  ArcticCurves ac;
  ac.specials = special_points(sd);
  auto find = [&](const std::string &n) {
    for (const auto &p : ac.specials)
      if (p.name == n) return p.at;
    return Point2{0, 0};
  };
  const Point2 B1 = find("B1"), B2 = find("B2"), Cp = find("C+"), Cm = find("C-");

  // z in (0,1) runs B1 -> C+, z in (1,inf) (as 1/u, u from 1 down to 0) runs
  // C+ -> B2 once both are put on the chi > 0 side
  Polyline low = sample_range(sd, 0.0, 1.0, samples, false);
  Polyline high = sample_range(sd, 1.0, 0.0, samples, true);
  orient_positive(low);
  orient_positive(high);
  Polyline &f = ac.frozen_boundary;
  f.push_back(B1);
  append(f, low);
  f.push_back(Cp);
  append(f, high);
  f.push_back(B2);
  append(f, mirrored_reversed(high));
  f.push_back(Cm);
  append(f, mirrored_reversed(low));
  f.push_back(B1);

  for (const Interval &I : sd.bands) {
    Polyline half = sample_range(sd, I.lo, I.hi, samples, false);
    orient_positive(half);
    const Point2 a0{0.0, (I.lo + 1.0) / (I.lo - 1.0)}, a1{0.0, (I.hi + 1.0) / (I.hi - 1.0)};
    Polyline c;
    c.push_back(a0);
    append(c, half);
    c.push_back(a1);
    append(c, mirrored_reversed(half));
    c.push_back(a0);
    ac.smooth_boundaries.push_back(std::move(c));
  }
  return ac;
}

int smooth_component_count(const SpectralData &sd) {
  require_standard(sd.spec);
  return sd.k_prime - 1;
}

PhaseGrid phase_grid(const SpectralData &sd, int n, int threads) {
  PhaseGrid g;
  g.n = n;
  g.cells.resize(static_cast<std::size_t>(n) * n);
  threads = std::max(1, threads);
  auto work = [&](int t) {
    for (int j = t; j < n; j += threads)
      for (int i = 0; i < n; ++i) g.cells[j * n + i] = classify(sd, g.coord(i), g.coord(j));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t);
        } catch (...) {
          errs[t] = std::current_exception();
        }
      });
    for (auto &th : pool) th.join();
    for (auto &e : errs)
      if (e) std::rethrow_exception(e);
  }
  return g;
}

int count_smooth_components(const PhaseGrid &g) {
  const int n = g.n;
  std::vector<int> seen(g.cells.size(), 0);
  int comps = 0;
  std::vector<int> stack;
  for (int s = 0; s < n * n; ++s) {
    if (seen[s] || g.cells[s].label != Region::Smooth) continue;
    ++comps;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      const int i = c % n, j = c / n;
      const int nb[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
      for (const auto &q : nb) {
        if (q[0] < 0 || q[0] >= n || q[1] < 0 || q[1] >= n) continue;
        const int d = q[1] * n + q[0];
        if (!seen[d] && g.cells[d].label == Region::Smooth) {
          seen[d] = 1;
          stack.push_back(d);
        }
      }
    }
  }
  return comps;
}

double distance_to_polyline(const Polyline &p, Point2 q) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const double ax = p[i].x, ay = p[i].y, bx = p[i + 1].x, by = p[i + 1].y;
    const double dx = bx - ax, dy = by - ay;
    const double L = dx * dx + dy * dy;
    double t = L > 0 ? ((q.x - ax) * dx + (q.y - ay) * dy) / L : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::hypot(ax + t * dx - q.x, ay + t * dy - q.y));
  }
  return best;
}

double boundary_offset_cells(const PhaseGrid &g, const ArcticCurves &c) {
  const int n = g.n;
  const double h = 2.0 / n;
  double worst = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const std::string t = g.at(i, j).tag();
      const bool edge = (i + 1 < n && g.at(i + 1, j).tag() != t) ||
                        (j + 1 < n && g.at(i, j + 1).tag() != t);
      if (!edge) continue;
      const Point2 q{g.coord(i), g.coord(j)};
      double d = distance_to_polyline(c.frozen_boundary, q);
      for (const Polyline &p : c.smooth_boundaries) d = std::min(d, distance_to_polyline(p, q));
      worst = std::max(worst, d / h);
    }
  return worst;
}

} // namespace aztec
