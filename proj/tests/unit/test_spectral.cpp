#include <doctest.h>

#include <random>

#include "aztec/spectral.hpp"
#include "fixtures.hpp"

using namespace aztec;

namespace {
WeightSpec random_standard(std::mt19937_64 &rng, int k) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> a, b;
  for (int i = 0; i < k; ++i) {
    a.push_back(std::exp(u(rng)));
    b.push_back(std::exp(u(rng)));
  }
  double pa = 1, pb = 1;
  for (int i = 0; i < k; ++i) pa *= a[i], pb *= b[i];
  b[0] *= pa / pb;
  return make_spec(k, a, b);
}
} // namespace

TEST_CASE("transition symbols") {
  const WeightSpec s = fixtures::uniform();
  Mat2c o = transition_symbol<double>(s, 1, Half::Odd, cd(2.0));
  CHECK(std::abs(o(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(o(0, 1) - 0.5) < 1e-15);
  CHECK(std::abs(o(1, 0) - 1.0) < 1e-15);
  CHECK(std::abs(o(1, 1) - 1.0) < 1e-15);
  Mat2c e = transition_symbol<double>(s, 1, Half::Even, cd(2.0));
  Mat2c want;
  want << 2.0, 1.0, 2.0, 2.0;
  CHECK((e - want).norm() < 1e-14);
  CHECK_THROWS_AS(transition_symbol<double>(s, 1, Half::Even, cd(1.0)), Error);
  CHECK_THROWS_AS(transition_symbol<double>(s, 1, Half::Odd, cd(0.0)), Error);

  const WeightSpec g = make_spec(2, {1.3, 0.4}, {2.0, 0.7}, {1.5, 0.8});
  const cd z(0.3, 1.7);
  for (int m = 1; m <= 2; ++m) {
    const Mat2c pr = transition_symbol<double>(g, m, Half::Odd, z) *
                     transition_symbol<double>(g, m, Half::Even, z);
    CHECK(std::abs(pr.determinant() - 1.0) < 1e-13);
  }
  Mat2c prod = Mat2c::Identity();
  for (int m = 1; m <= 2; ++m)
    prod = prod * transition_symbol<double>(g, m, Half::Odd, z) *
           transition_symbol<double>(g, m, Half::Even, z);
  CHECK((prod - phi<double>(g, z)).norm() < 1e-12 * prod.norm());
}

TEST_CASE("phi for the uniform model") {
  Mat2c P = phi<double>(fixtures::uniform(), cd(2.0));
  Mat2c want;
  want << 3.0, 2.0, 4.0, 3.0;
  CHECK((P - want).norm() < 1e-14);
  const Mat2c far = phi<double>(fixtures::fig2x3(), cd(1e9, 3e8));
  CHECK(std::abs(far(0, 0) - 1.0) < 1e-6);
  CHECK(std::abs(far(1, 1) - 1.0) < 1e-6);
  CHECK(std::abs(far(0, 1)) < 1e-6);
}

TEST_CASE("discriminant, uniform") {
  const SpectralData sd = discriminant(fixtures::uniform());
  REQUIRE(sd.p.degree() == 1);
  CHECK(sd.p[0] == 0.0);
  CHECK(sd.p[1] == doctest::Approx(16.0));
  CHECK(sd.k_prime == 1);
  CHECK(sd.q.degree() == 0);
  CHECK(sd.bands.empty());
  CHECK(sd.cuts.size() == 1);
  CHECK(sd.dn.degree() == 0);
  CHECK(sd.dn[0] == doctest::Approx(-4.0));
  const cd r = p0_sqrt(sd, cd(-1.0));
  CHECK(std::abs(r - cd(0, 4)) < 1e-14);
  CHECK_THROWS_AS(discriminant(make_spec(2, {2, 1}, {1, 1})), Error);
}

TEST_CASE("discriminant, named specs") {
  const SpectralData f = discriminant(fixtures::fig2x3());
  CHECK(f.p.degree() == 5);
  CHECK(f.roots.size() == 5);
  CHECK(f.k_prime == 3);
  CHECK(f.bands.size() == 2);
  const SpectralData t = discriminant(fixtures::two_periodic());
  CHECK(t.k_prime == 2);
  // uniform k=2 has a double root: k' = 1
  const SpectralData u2 = discriminant(make_spec(2, {1, 1}, {1, 1}));
  CHECK(u2.k_prime == 1);
  CHECK(u2.q.degree() == 1);
}

TEST_CASE("discriminant invariants on random specs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const int k = 1 + t % 5;
    const SpectralData sd = discriminant(random_standard(rng, k));
    CHECK(sd.roots.front() == 0.0);
    for (std::size_t i = 1; i < sd.roots.size(); ++i) {
      if (i % 2 == 1) CHECK(sd.roots[i] < sd.roots[i - 1]);
      else CHECK(sd.roots[i] <= sd.roots[i - 1]);
    }
    CHECK(sd.trace_poly.leading() == doctest::Approx(2.0));
    for (int i = 0; i <= sd.trace_poly.degree(); ++i) CHECK(sd.trace_poly[i] >= 0.0);
    CHECK(sd.trace_poly.degree() == k);
    CHECK(sd.p0.degree() == 2 * sd.k_prime - 1);
    CHECK(sd.dn.degree() == sd.k_prime - 1);
    CHECK(sd.p0.leading() > 0.0);
  }
}

TEST_CASE("eigen, closed forms") {
  const SpectralData sd = discriminant(fixtures::uniform());
  EigenSystem e = eigen(sd, cd(4.0));
  CHECK(std::abs(e.rho1 - 3.0) < 1e-13);
  CHECK(std::abs(e.rho2 - 1.0 / 3.0) < 1e-13);
  e = eigen(sd, cd(2.0));
  CHECK(std::abs(e.rho1 - (3.0 + 2.0 * std::sqrt(2.0))) < 1e-13);
  CHECK(std::abs(e.rho1 * e.rho2 - 1.0) < 1e-13);
  e = eigen(sd, cd(-1.0));
  CHECK(std::abs(std::abs(e.rho1) - 1.0) < 1e-13);
  CHECK(std::abs(std::abs(e.rho2) - 1.0) < 1e-13);
  CHECK_THROWS_AS(eigen(sd, cd(0.0)), Error);
}

TEST_CASE("eigen invariants on random specs") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 10; ++t) {
    const SpectralData sd = discriminant(random_standard(rng, 1 + t % 5));
    for (int j = 0; j < 100; ++j) {
      const cd z(u(rng), u(rng));
      const EigenSystem e = eigen(sd, z);
      CHECK(std::abs(e.rho1 * e.rho2 - 1.0) < 1e-10);
      CHECK(std::abs(e.rho2) < 1.0);
      CHECK(std::abs(e.rho1) > 1.0);
      const EigenSystem c = eigen(sd, std::conj(z));
      CHECK(std::abs(c.rho1 - std::conj(e.rho1)) < 1e-10 * std::abs(e.rho1));
      const Mat2c P = phi<double>(sd.spec, z);
      CHECK((e.proj1 * e.proj1 - e.proj1).norm() < 1e-9 * (1 + e.proj1.norm()));
      CHECK((P * e.proj1 - e.rho1 * e.proj1).norm() < 1e-9 * (1 + P.norm()));
      CHECK((e.rho1 * e.proj1 + e.rho2 * e.proj2 - P).norm() < 1e-9 * P.norm());
      const EigenSystem d = eigen_direct(sd.spec, z);
      CHECK(std::abs(d.rho1 - e.rho1) < 1e-9 * std::abs(e.rho1));
    }
  }
}

TEST_CASE("log derivative") {
  const SpectralData sd = discriminant(fixtures::uniform());
  const cd z(0.7, 0.4);
  const cd want = -1.0 / ((z - 1.0) * std::sqrt(z));
  CHECK(std::abs(log_derivative_rho1(sd, z) - want) < 1e-13);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 5; ++t) {
    const SpectralData s = discriminant(random_standard(rng, 1 + t));
    for (int j = 0; j < 40; ++j) {
      const cd w(u(rng), u(rng));
      const double h = 1e-5;
      const cd fd = (std::log(eigen(s, w + h).rho1) - std::log(eigen(s, w - h).rho1)) / (2 * h);
      const cd ld = log_derivative_rho1(s, w);
      CHECK(std::abs(fd - ld) < 1e-6 * (1 + std::abs(ld)));
      const cd fd2 = (std::log(eigen(s, w + h).rho2) - std::log(eigen(s, w - h).rho2)) / (2 * h);
      CHECK(std::abs(fd2 + ld) < 1e-6 * (1 + std::abs(ld)));
    }
  }
}

TEST_CASE("Kasteleyn characteristic polynomial") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 1; k <= 3; ++k) {
    const WeightSpec s = random_standard(rng, k);
    for (int j = 0; j < 50; ++j) {
      const cd z(u(rng), u(rng)), lam(u(rng), u(rng));
      const Mat2c P = phi<double>(s, z);
      const double sg = k % 2 == 0 ? 1.0 : -1.0;
      const cd want = std::pow(1.0 - z, k) * (lam * Mat2c::Identity() - sg * P).determinant();
      const cd got = kasteleyn_charpoly(s, z, lam);
      CHECK(std::abs(got - want) <= 1e-9 * std::abs(want));
    }
    const cd z(0.3, -0.8);
    CHECK(std::abs(kasteleyn_charpoly(s, z, 0.0) - std::pow(1.0 - z, k)) < 1e-12);
  }
}

TEST_CASE("switching identity") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int t = 0; t < 200; ++t) {
    const double a = u(rng), b = u(rng), c = u(rng), al = u(rng), be = u(rng), ga = u(rng);
    const cd z(u(rng), u(rng) - 1.5);
    const SwitchResult r = wiener_hopf_switch(a, b, c, al, be, ga, z);
    CHECK(r.residual < 1e-12 * (1 + r.lhs.cwiseAbs().maxCoeff()));
    CHECK(std::abs(r.left_a.determinant() - r.right_b.determinant()) < 1e-12);
    const SwitchResult tr = wiener_hopf_switch(a, b, 1 / b, al, be, 1 / be, z);
    CHECK((tr.left_a - tr.right_a).norm() < 1e-12);
    CHECK((tr.left_b - tr.right_b).norm() < 1e-12);
  }
  CHECK_THROWS_AS(wiener_hopf_switch(1, 1, 0, 1, 1, 0, cd(1)), Error);
}
