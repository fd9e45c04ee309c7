#include <doctest.h>

#include <random>

#include "aztec/model.hpp"
#include "fixtures.hpp"

using namespace aztec;

TEST_CASE("validate_spec flags the standard model") {
  auto s = validate_spec(nlohmann::json::parse(R"({"k":1,"alpha":[1],"beta":[1]})"));
  CHECK(s.standard);
  CHECK(s.gamma == std::vector<double>{1.0});
  s = validate_spec(nlohmann::json::parse(R"({"k":3,"alpha":[3.3333333333333335,0.3,1],"beta":[1,1,1]})"));
  CHECK(s.standard);
  s = validate_spec(nlohmann::json::parse(R"({"k":2,"alpha":[2,1],"beta":[1,1]})"));
  CHECK_FALSE(s.standard);
  s = validate_spec(nlohmann::json::parse(R"({"k":1,"alpha":[1],"beta":[1],"gamma":[2]})"));
  CHECK_FALSE(s.standard);
}

TEST_CASE("validate_spec rejects bad input") {
  auto code = [](const char *txt) {
    try {
      validate_spec(nlohmann::json::parse(txt));
    } catch (const Error &e) {
      return e.code();
    }
    return Errc::OutOfRange;
  };
  CHECK(code(R"({"k":2,"alpha":[1],"beta":[1,1]})") == Errc::LengthMismatch);
  CHECK(code(R"({"k":1,"alpha":[0],"beta":[1]})") == Errc::NonPositiveWeight);
  CHECK(code(R"({"k":1,"alpha":[-1],"beta":[1]})") == Errc::NonPositiveWeight);
  CHECK(code(R"({"k":1,"alpha":[1],"beta":[1],"gamma":[]})") == Errc::LengthMismatch);
}

TEST_CASE("validate_spec is idempotent") {
  const WeightSpec s = fixtures::fig2x3();
  CHECK(validate_spec(spec_to_json(s)) == s);
}

TEST_CASE("face classes") {
  for (int k = 1; k <= 4; ++k) {
    for (int idx = 0; idx < 4 * k; ++idx) {
      const auto r = FaceWeights::representative(k, idx);
      CHECK(FaceWeights::class_index(k, r[0], r[1]) == idx);
    }
    for (int i = -7; i < 7; ++i)
      for (int j = -7; j < 7; ++j) {
        const int c = FaceWeights::class_index(k, i, j);
        CHECK(FaceWeights::class_index(k, i + 2, j - 2) == c);
        CHECK(FaceWeights::class_index(k, i + k, j + k) == c);
      }
  }
}

TEST_CASE("faces_from_entries detects periodicity violations") {
  CHECK_THROWS_AS(faces_from_entries(1, {{0, 0, 1.0}, {2, -2, 2.0}, {1, 0, 1.0}, {0, 1, 1.0}}),
                  Error);
  CHECK_THROWS_AS(faces_from_entries(1, {{0, 0, 1.0}}), Error);
  const FaceWeights f = faces_from_entries(1, {{0, 0, 1.0}, {2, -2, 1.0}, {1, 0, 2.0}, {0, 1, 3.0}, {1, -1, 4.0}});
  CHECK(f(1, 1) == 1.0);
}

TEST_CASE("gauge_from_faces") {
  FaceWeights ones{2, std::vector<double>(8, 1.0)};
  const GaugeResult g = gauge_from_faces(ones, 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(g.alpha[i] == 1.0);
    CHECK(g.beta[i] == 1.0);
    CHECK(g.gamma_hat[i] == 1.0);
    CHECK(g.delta_hat[i] == 1.0);
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 1; k <= 5; ++k)
    for (int N : {2, 4, 6}) {
      FaceWeights f{k, {}};
      for (int c = 0; c < 4 * k; ++c) f.table.push_back(std::exp(u(rng)));
      const GaugeResult r = gauge_from_faces(f, N);
      double pa = 1, pb = 1;
      for (int i = 0; i < k; ++i) {
        CHECK(r.alpha[i] * r.gamma_hat[i] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.beta[i] * r.delta_hat[i] == doctest::Approx(1.0).epsilon(1e-12));
        pa *= r.alpha[i];
        pb *= r.beta[i];
      }
      CHECK(pa == doctest::Approx(pb).epsilon(1e-12));
      CHECK(path_spec_from_faces(f, N).standard);
    }
}

TEST_CASE("geometry and coordinates") {
  const DiamondGeometry g1 = geometry(fixtures::uniform(), 2);
  CHECK(g1.m_min() == 1);
  CHECK(g1.m_max() == 1);
  CHECK(g1.xi_min() == -1);
  CHECK(g1.xi_max() == -1);
  CHECK(g1.n() == 1);
  const DiamondGeometry g2 = geometry(fixtures::fig2x3(), 64);
  CHECK(g2.size() == 192);
  CHECK(g2.xi_min() == -96);
  CHECK_THROWS_AS(geometry(fixtures::uniform(), 3), Error);

  const DiamondGeometry g3 = geometry(fixtures::two_periodic(), 8);
  LocalIndex li = to_local(g3, 0.0, 0.0, 1, -2);
  CHECK(li.m == 5);
  CHECK(li.xi == -6);
  CHECK(li.e_chi == 0.0);
  li = to_local(g3, 0.1, 0.1);
  CHECK(li.m == 5);  // 4.4 -> 5
  CHECK(li.xi == -3); // -3.6 -> -3
  CHECK(li.e_chi == doctest::Approx(0.6));
  CHECK(li.e_eta == doctest::Approx(0.6));

  for (int m = g2.m_min(); m <= g2.m_max(); ++m)
    for (int xi = g2.xi_min(); xi <= g2.xi_max(); ++xi) {
      const auto ce = to_global(g2, m, xi);
      const LocalIndex b = to_local(g2, ce[0], ce[1]);
      REQUIRE(b.m == m);
      REQUIRE(b.xi == xi);
    }
}
