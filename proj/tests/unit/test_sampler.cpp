#include <doctest.h>

#include <cmath>
#include <map>

#include "aztec/oracle.hpp"
#include "fixtures.hpp"

using namespace aztec;

namespace {

// Pearson statistic of sampled tilings against the enumerated law.
double chi_square(const WeightSpec &s, int N, int samples, int &dof) {
  const EnumeratedLaw law = enumerate(s, N);
  std::map<std::vector<Domino>, std::size_t> idx;
  for (std::size_t i = 0; i < law.count(); ++i) idx[law.tiling(i).dominoes] = i;
  std::vector<int> hits(law.count(), 0);
  for (int r = 0; r < samples; ++r) {
    const Tiling t = sample_tiling(s, N, 1234, r);
    const auto it = idx.find(t.dominoes);
    REQUIRE(it != idx.end());
    ++hits[it->second];
  }
  double x2 = 0;
  for (std::size_t i = 0; i < law.count(); ++i) {
    const double e = samples * law.probability(i);
    x2 += (hits[i] - e) * (hits[i] - e) / e;
  }
  dof = static_cast<int>(law.count()) - 1;
  return x2;
}

} // namespace

TEST_CASE("shuffling partition function matches enumeration") {
  for (const WeightSpec &s : {fixtures::uniform(), make_spec(1, {1.3}, {2.0}, {0.7}),
                              fixtures::two_periodic(), make_spec(2, {2.0, 0.5}, {1.0, 3.0}, {1.0, 1.5})}) {
    for (int N : {2, 4}) {
      if (s.k * N > 6) continue;
      const EnumeratedLaw law = enumerate(s, N);
      CHECK(shuffle_log_partition(s, N) == doctest::Approx(std::log(law.Z)).epsilon(1e-12));
    }
  }
  const WeightSpec f = fixtures::fig2x3();
  CHECK(shuffle_log_partition(f, 2) == doctest::Approx(std::log(enumerate(f, 2).Z)).epsilon(1e-12));
}

TEST_CASE("samples are valid tilings and reproducible") {
  const WeightSpec s = fixtures::fig2x3();
  const Tiling a = sample_tiling(s, 8, 42, 3), b = sample_tiling(s, 8, 42, 3);
  CHECK(a.dominoes == b.dominoes);
  CHECK(a.dominoes.size() == std::size_t(24 * 25));
  CHECK_NOTHROW(validate_tiling(a));
  CHECK(sample_tiling(s, 8, 42, 4).dominoes != a.dominoes);
  CHECK(render_svg(a) == render_svg(b));
}

TEST_CASE("uniform N=2 frequencies") {
  const int n = 80000;
  const EnumeratedLaw law = enumerate(fixtures::uniform(), 2);
  std::map<std::vector<Domino>, int> cnt;
  for (int r = 0; r < n; ++r) ++cnt[sample_tiling(fixtures::uniform(), 2, 7, r).dominoes];
  CHECK(cnt.size() == 8);
  for (const auto &[t, c] : cnt) CHECK(std::abs(double(c) / n - 0.125) <= 0.005);
}

TEST_CASE("chi-square against the oracle") {
  // 1% critical values of chi^2 with 7 and 1023 degrees of freedom
  int dof = 0;
  double x2 = chi_square(make_spec(1, {1.0}, {2.0}), 2, 20000, dof);
  CHECK(dof == 7);
  CHECK(x2 < 18.475);
  x2 = chi_square(fixtures::two_periodic(), 2, 100000, dof);
  CHECK(dof == 1023);
  CHECK(x2 < 1131.2);
  x2 = chi_square(fixtures::uniform(), 4, 100000, dof);
  CHECK(x2 < 1131.2);
}

TEST_CASE("empirical stats") {
  std::vector<ParticleConfig> cs;
  for (int r = 0; r < 50; ++r) cs.push_back(tiling_to_paths(sample_tiling(fixtures::uniform(), 4, 1, r)));
  // nothing lies above the top row, so the height there is 0
  const auto e = empirical_stats(cs, {{StatQuery::Kind::Height, 3, 4}});
  CHECK(e[0].mean == 0.0);
  CHECK(e[0].stderr_ == 0.0);
  CHECK_THROWS_AS(empirical_stats(cs, {}), Error);
  CHECK_THROWS_AS(empirical_stats({cs[0]}, {{}}), Error);
}

TEST_CASE("svg has one rectangle per domino") {
  const Tiling t = sample_tiling(fixtures::uniform(), 2, 9);
  const std::string svg = render_svg(t);
  std::size_t n = 0;
  for (std::size_t p = svg.find("<rect"); p != std::string::npos; p = svg.find("<rect", p + 1)) ++n;
  CHECK(n == 6);
  CHECK(svg.rfind("</svg>") != std::string::npos);
}
