#include <doctest.h>

#include "aztec/phases.hpp"
#include "fixtures.hpp"

using namespace aztec;

TEST_CASE("critical polynomial, uniform closed form") {
  const SpectralData sd = discriminant(fixtures::uniform());
  const double chi = 0.37, eta = -0.21;
  const RPoly P = critical_polynomial(sd, chi, eta);
  // 16 (z(eta-1) - (eta+1))^2 - 64 chi^2 z
  const double a = eta - 1, b = -(eta + 1);
  REQUIRE(P.degree() == 2);
  CHECK(P[2] == doctest::Approx(16 * a * a));
  CHECK(P[1] == doctest::Approx(32 * a * b - 64 * chi * chi));
  CHECK(P[0] == doctest::Approx(16 * b * b));
}

TEST_CASE("critical polynomial at z = 1 and its degree") {
  for (const WeightSpec &s : {fixtures::fig2x3(), fixtures::two_periodic()}) {
    const SpectralData sd = discriminant(s);
    const int k = s.k;
    for (double chi : {-0.7, 0.1, 0.55})
      for (double eta : {-0.4, 0.3}) {
        const RPoly P = critical_polynomial(sd, chi, eta);
        CHECK(P.degree() == 2 * sd.k_prime);
        CHECK(P(1.0) == doctest::Approx(4.0 * k * k * sd.p0(1.0) * (1 - chi * chi)));
      }
  }
}

TEST_CASE("classify examples") {
  const SpectralData u = discriminant(fixtures::uniform());
  PhasePoint p = classify(u, 0.0, 0.0);
  CHECK(p.label == Region::Rough);
  CHECK(std::abs(p.z1 - cd(-1.0)) < 1e-6);
  CHECK(p.z1.imag() == 0.0);
  CHECK(classify(u, 0.9, 0.9).label == Region::Frozen);

  const SpectralData f = discriminant(fixtures::fig2x3());
  const double mid = 0.5 * (f.bands[0].lo + f.bands[0].hi);
  p = classify(f, 0.0, (mid + 1) / (mid - 1));
  CHECK(p.label == Region::Smooth);
  CHECK(p.ell == 1);
  CHECK_THROWS_AS(classify(f, 1.0, 0.0), Error);
}

TEST_CASE("root accounting and symmetry") {
  for (const WeightSpec &s : {fixtures::fig2x3(), fixtures::two_periodic()}) {
    const SpectralData sd = discriminant(s);
    for (int i = 0; i < 41; ++i)
      for (int j = 0; j < 41; ++j) {
        const double chi = -0.975 + 0.04875 * i, eta = -0.975 + 0.04875 * j;
        const PhasePoint a = classify(sd, chi, eta);
        const PhasePoint b = classify(sd, -chi, eta);
        CHECK(a.tag() == b.tag());
        int banded = 0;
        for (const cd &r : a.critical_roots)
          for (const Interval &I : sd.bands)
            if (std::abs(r.imag()) < 1e-7 && r.real() >= I.lo - 1e-9 && r.real() <= I.hi + 1e-9)
              ++banded;
        CHECK(banded >= 2 * sd.k_prime - 2);
        if (a.label == Region::Rough && std::abs(chi) > 1e-12) CHECK(a.sheet == (chi > 0 ? 1 : 2));
      }
  }
}

TEST_CASE("l_map") {
  const SpectralData sd = discriminant(fixtures::fig2x3());
  const double chi = 0.3, eta = 0.1;
  const auto [z1, sheet] = l_map(sd, chi, eta);
  CHECK(sheet == 1);
  const RPoly P = critical_polynomial(sd, chi, eta);
  CHECK(std::abs(P(z1)) <= 1e-9 * P.scale());
  CHECK(std::abs(f_prime(sd, sheet, chi, eta, z1)) < 1e-8);
  const auto [z2, s2] = l_map(sd, chi + 1e-4, eta);
  CHECK(s2 == 1);
  CHECK(std::abs(z2 - z1) < 1e-2);
  CHECK_THROWS_AS(l_map(sd, 0.9, 0.95), Error);
}

TEST_CASE("special points") {
  const SpectralData u = discriminant(fixtures::uniform());
  auto sp = special_points(u);
  CHECK(sp.size() == 4);
  for (const auto &p : sp)
    if (p.name == "C+") {
      CHECK(p.at.x == 1.0);
      CHECK(p.at.y == doctest::Approx(1.0));
    }
  const SpectralData f = discriminant(fixtures::fig2x3());
  sp = special_points(f);
  int a = 0;
  for (const auto &p : sp)
    if (p.name[0] == 'A') {
      ++a;
      CHECK(p.at.y > -1.0);
      CHECK(p.at.y < 1.0);
    }
  CHECK(a == 4);
}

TEST_CASE("arctic points are double roots of the critical polynomial") {
  const SpectralData sd = discriminant(fixtures::fig2x3());
  for (double z : {0.05, 0.4, 0.93, 1.2, 3.0, 40.0, -0.5, -1.5, -3.0, -7.0}) {
    if (z < 0 && sd.band_of(z) == 0) continue;
    const Point2 q = arctic_point(sd, z);
    const RPoly P = critical_polynomial(sd, q.x, q.y);
    CHECK(std::abs(P(z)) < 1e-8 * P.scale() * std::pow(1 + std::abs(z), P.degree()));
    CHECK(std::abs(P.derivative()(z)) < 1e-7 * P.scale() * std::pow(1 + std::abs(z), P.degree()));
  }
}

TEST_CASE("arctic curves are closed and inside the square") {
  const SpectralData sd = discriminant(fixtures::fig2x3());
  const ArcticCurves ac = arctic_curves(sd, 128);
  CHECK(ac.smooth_boundaries.size() == 2);
  std::vector<Polyline> all{ac.frozen_boundary};
  all.insert(all.end(), ac.smooth_boundaries.begin(), ac.smooth_boundaries.end());
  for (const Polyline &p : all) {
    CHECK(std::hypot(p.front().x - p.back().x, p.front().y - p.back().y) < 1e-9);
    for (const Point2 &q : p) {
      CHECK(std::abs(q.x) <= 1.0 + 1e-12);
      CHECK(std::abs(q.y) <= 1.0 + 1e-12);
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      double d = 1e9;
      for (const Point2 &q : all[i]) d = std::min(d, distance_to_polyline(all[j], q));
      CHECK(d > 0.0);
    }
  CHECK(smooth_component_count(sd) == 2);
  CHECK(smooth_component_count(discriminant(fixtures::uniform())) == 0);
  CHECK(smooth_component_count(discriminant(fixtures::two_periodic())) == 1);
}

TEST_CASE("grid flood fill") {
  const SpectralData sd = discriminant(fixtures::two_periodic());
  const PhaseGrid g = phase_grid(sd, 80, 2);
  CHECK(count_smooth_components(g) == 1);
  CHECK(boundary_offset_cells(g, arctic_curves(sd, 256)) <= 2.0);
}
