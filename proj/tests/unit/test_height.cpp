#include <doctest.h>

#include <cmath>

#include "aztec/height.hpp"
#include "aztec/kernels.hpp"
#include "fixtures.hpp"

using namespace aztec;

namespace {

const std::vector<std::array<double, 2>> kRoughPoints{{0.3, 0.1}, {-0.3, 0.1}, {0.5, -0.3}, {-0.5, -0.3}};

} // namespace

TEST_CASE("smooth closed form") {
  const SpectralData sd = discriminant(fixtures::fig2x3());
  CHECK(smooth_slope_count(sd, 1) == 1);
  CHECK(smooth_slope_count(sd, 2) == 2);
  const double mid = 0.5 * (sd.bands[0].lo + sd.bands[0].hi);
  const double eta = (mid + 1) / (mid - 1);
  CHECK(height_limit(sd, 0.0, eta) == doctest::Approx(-0.5 * (eta - 1)));
  CHECK_THROWS_AS(height_limit(sd, 0.95, 0.9), Error);
}

TEST_CASE("rough heights are real and match the kernel density") {
  for (const WeightSpec &s : {fixtures::uniform(), fixtures::two_periodic(), fixtures::fig2x3()}) {
    const SpectralData sd = discriminant(s);
    for (const auto &[chi, eta] : kRoughPoints) {
      const HeightValue h = height_query(sd, chi, eta);
      CHECK(h.label == Region::Rough);
      CHECK(std::abs(h.imag) < 1e-9);
      const double d = 1e-4;
      const double deta = (height_limit(sd, chi, eta + d) - height_limit(sd, chi, eta - d)) / (2 * d);
      const KernelBlock K = rough_kernel(sd, chi, eta, 0, 0, 0, 0);
      CHECK(deta == doctest::Approx(-0.5 * K.value.trace().real()).epsilon(1e-6));
    }
  }
}

TEST_CASE("height is continuous across the rough-smooth boundary") {
  const SpectralData sd = discriminant(fixtures::fig2x3());
  // walk down the chi = 0.2 line from the rough side into the first smooth region
  double lo = 0.0, hi = -0.6; // rough at lo, smooth at hi
  REQUIRE(classify(sd, 0.2, lo).label == Region::Rough);
  REQUIRE(classify(sd, 0.2, hi).label == Region::Smooth);
  for (int it = 0; it < 50; ++it) {
    const double mid = 0.5 * (lo + hi);
    (classify(sd, 0.2, mid).label == Region::Rough ? lo : hi) = mid;
  }
  const double rough = height_limit(sd, 0.2, lo + 1e-3);
  const PhasePoint sp = classify(sd, 0.2, hi - 1e-3);
  REQUIRE(sp.label == Region::Smooth);
  const double smooth = height_limit(sd, 0.2, hi - 1e-3);
  CHECK(std::abs(rough - smooth) < 1e-2);
}

TEST_CASE("gradient matches finite differences") {
  for (const WeightSpec &s : {fixtures::uniform(), fixtures::fig2x3()}) {
    const SpectralData sd = discriminant(s);
    const double k = s.k, d = 1e-3;
    for (const auto &[chi, eta] : kRoughPoints) {
      const auto g = height_gradient(sd, chi, eta);
      const double hx = (height_limit(sd, chi + k * d, eta) - height_limit(sd, chi - k * d, eta)) / (2 * d);
      const double hy = (height_limit(sd, chi, eta + 2 * d) - height_limit(sd, chi, eta - 2 * d)) / (2 * d);
      CHECK(std::abs(g[0] - hx) < 5e-3);
      CHECK(std::abs(g[1] - hy) < 5e-3);
    }
  }
  // uniform centre: z1 = -1, so the y-slope is -arg(-1)/pi = -1
  CHECK(height_gradient(discriminant(fixtures::uniform()), 0.0, 0.0)[1] == doctest::Approx(-1.0));
}

TEST_CASE("Burgers equation") {
  const SpectralData sd = discriminant(fixtures::uniform());
  const BurgersSample a = burgers_residual(sd, 0.0, 0.0, 1e-3);
  CHECK(a.residual < 1e-2);
  for (const WeightSpec &s : {fixtures::two_periodic(), fixtures::fig2x3()}) {
    const SpectralData f = discriminant(s);
    const BurgersSample b1 = burgers_residual(f, 0.3, 0.1, 1e-2);
    const BurgersSample b2 = burgers_residual(f, 0.3, 0.1, 1e-3);
    CHECK(b2.residual * 5 < b1.residual);
    CHECK(b2.det_residual < 1e-9);
    const EigenSystem e = eigen(f, b2.g);
    CHECK(std::abs(b2.f - e.rho1) < 1e-12);
  }
  CHECK_THROWS_AS(burgers_residual(sd, 0.99, 0.0, 1e-2), Error);
}

TEST_CASE("winding numbers") {
  for (const WeightSpec &s : {fixtures::fig2x3(), fixtures::two_periodic(), fixtures::uniform()}) {
    const SpectralData sd = discriminant(s);
    const auto cuts = cut_contours(sd);
    CHECK(cuts.size() == std::size_t(sd.k_prime - 1));
    for (const Contour &c : cuts) CHECK(winding_number(sd, c) == 1);
    CHECK(winding_number(sd, pole_contour(sd)) == -s.k);
    CHECK(winding_number(sd, Contour::circle(4.0, 0.5)) == 0);
    // Smooth(ell): the pole plus the n_ell enclosed cuts give n_ell - k
    for (int ell = 1; ell < sd.k_prime; ++ell) {
      int w = winding_number(sd, pole_contour(sd));
      for (int j = 0; j < smooth_slope_count(sd, ell); ++j) w += winding_number(sd, cuts[j]);
      CHECK(w == smooth_slope_count(sd, ell) - s.k);
    }
  }
}
