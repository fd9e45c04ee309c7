#include "aztec/model.hpp"

#include <cmath>
#include <numeric>

namespace aztec {

namespace {

void check_seq(const std::vector<double> &v, int k, const char *name) {
  if (static_cast<int>(v.size()) != k)
    throw Error(Errc::LengthMismatch, std::string(name) + " has length " +
                                          std::to_string(v.size()) + ", k = " +
                                          std::to_string(k));
  for (double x : v)
    if (!(x > 0.0) || !std::isfinite(x))
      throw Error(Errc::NonPositiveWeight, std::string(name) + " entry " + std::to_string(x));
}

double product(const std::vector<double> &v) {
  return std::accumulate(v.begin(), v.end(), 1.0, std::multiplies<>());
}

int pmod(int a, int m) { return ((a % m) + m) % m; }

} // namespace

WeightSpec make_spec(int k, std::vector<double> alpha, std::vector<double> beta,
                     std::vector<double> gamma) {
  if (k < 1) throw Error(Errc::LengthMismatch, "k must be >= 1");
  if (gamma.empty()) gamma.assign(k, 1.0);
  check_seq(alpha, k, "alpha");
  check_seq(beta, k, "beta");
  check_seq(gamma, k, "gamma");
  WeightSpec s;
  s.k = k;
  s.alpha = std::move(alpha);
  s.beta = std::move(beta);
  s.gamma = std::move(gamma);
  bool unit_gamma = true;
  for (double g : s.gamma) unit_gamma = unit_gamma && g == 1.0;
  const double pa = product(s.alpha), pb = product(s.beta);
  s.standard = unit_gamma && std::abs(pa - pb) <= kStandardTol * std::max(pa, pb);
  return s;
}

WeightSpec validate_spec(const nlohmann::json &raw) {
  if (!raw.is_object() || !raw.contains("k"))
    throw Error(Errc::LengthMismatch, "model needs an integer field k");
  const int k = raw.at("k").get<int>();
  if (k < 1) throw Error(Errc::LengthMismatch, "k must be >= 1");
  auto seq = [&](const char *key) -> std::vector<double> {
    if (!raw.contains(key)) return {};
    return raw.at(key).get<std::vector<double>>();
  };
  std::vector<double> a = seq("alpha"), b = seq("beta"), g = seq("gamma");
  if (raw.contains("gamma")) check_seq(g, k, "gamma");
  return make_spec(k, a, b, g);
}

nlohmann::json spec_to_json(const WeightSpec &s) {
  return {{"k", s.k}, {"alpha", s.alpha}, {"beta", s.beta}, {"gamma", s.gamma},
          {"standard", s.standard}};
}

void require_standard(const WeightSpec &s) {
  if (!s.standard)
    throw Error(Errc::NotStandardModel,
                "asymptotic operations need gamma = 1 and prod(alpha) = prod(beta)");
}

int FaceWeights::class_index(int k, int i, int j) {
  const int s = pmod(i + j, 2 * k);
  const int d = pmod(i - j, 4);
  return 2 * s + d / 2;
}

std::array<int, 2> FaceWeights::representative(int k, int idx) {
  (void)k;
  const int s = idx / 2;
  const int d = 2 * (idx % 2) + (s % 2);
  return {(s + d) / 2, (s - d) / 2};
}

FaceWeights faces_from_entries(int k, const std::vector<std::array<double, 3>> &entries) {
  if (k < 1) throw Error(Errc::LengthMismatch, "k must be >= 1");
  FaceWeights f;
  f.k = k;
  f.table.assign(4 * k, 0.0);
  std::vector<bool> seen(4 * k, false);
  for (const auto &e : entries) {
    const double i = e[0], j = e[1], a = e[2];
    if (i != std::floor(i) || j != std::floor(j))
      throw Error(Errc::PeriodicityViolation, "face indices must be integers");
    if (!(a > 0.0) || !std::isfinite(a))
      throw Error(Errc::NonPositiveWeight, "face weight " + std::to_string(a));
    const int c = FaceWeights::class_index(k, static_cast<int>(i), static_cast<int>(j));
    if (seen[c] && f.table[c] != a)
      throw Error(Errc::PeriodicityViolation,
                  "faces (" + std::to_string(int(i)) + "," + std::to_string(int(j)) +
                      ") conflict with an equivalent face");
    seen[c] = true;
    f.table[c] = a;
  }
  for (int c = 0; c < 4 * k; ++c)
    if (!seen[c]) {
      const auto r = FaceWeights::representative(k, c);
      throw Error(Errc::PeriodicityViolation, "no weight for face class of (" +
                                                  std::to_string(r[0]) + "," +
                                                  std::to_string(r[1]) + ")");
    }
  return f;
}

GaugeResult gauge_from_faces(const FaceWeights &f, int N) {
  if (static_cast<int>(f.table.size()) != 4 * f.k)
    throw Error(Errc::PeriodicityViolation, "face table must hold 4k classes");
  for (double a : f.table)
    if (!(a > 0.0) || !std::isfinite(a))
      throw Error(Errc::NonPositiveWeight, "face weight " + std::to_string(a));
  const int K = f.k * N;
  GaugeResult g;
  for (int i = 1; i <= f.k; ++i) {
    g.alpha.push_back(f(i - 1, K + i - 3) / f(i, K + i - 3) * f(i - 1, K + i - 2) /
                      f(i - 2, K + i - 2));
    g.beta.push_back(f(i - 1, K + i - 2) / f(i - 1, K + i - 1) * f(i, K + i - 2) /
                     f(i, K + i - 3));
    g.gamma_hat.push_back(f(i, K + i - 4) / f(i + 1, K + i - 4) * f(i, K + i - 3) /
                          f(i - 1, K + i - 3));
    g.delta_hat.push_back(f(i, K + i - 3) / f(i, K + i - 2) * f(i + 1, K + i - 3) /
                          f(i + 1, K + i - 4));
  }
  return g;
}

WeightSpec path_spec_from_faces(const FaceWeights &f, int N) {
  GaugeResult g = gauge_from_faces(f, N);
  for (double &a : g.alpha) a = 1.0 / a;
  for (double &b : g.beta) b = 1.0 / b;
  return make_spec(f.k, g.alpha, g.beta);
}

DiamondGeometry geometry(const WeightSpec &s, int N) {
  if (N < 2 || N % 2 != 0)
    throw Error(Errc::OddN, "N must be even and >= 2, got " + std::to_string(N));
  return DiamondGeometry{s.k, N};
}

namespace {
// ceiling that treats values within 1e-12 of an integer as that integer
int snap_ceil(double x, double &err) {
  const double r = std::round(x);
  const int c = std::abs(x - r) <= 1e-12 * std::max(1.0, std::abs(x))
                    ? static_cast<int>(r)
                    : static_cast<int>(std::ceil(x));
  err = std::max(0.0, c - x);
  return c;
}
} // namespace

LocalIndex to_local(const DiamondGeometry &g, double chi, double eta, int kappa, int zeta) {
  LocalIndex li{};
  li.m = snap_ceil(0.5 * g.N * (chi + 1.0), li.e_chi) + kappa;
  li.xi = snap_ceil(0.25 * g.k * g.N * (eta - 1.0), li.e_eta) + zeta;
  return li;
}

std::array<double, 2> to_global(const DiamondGeometry &g, int m, int xi) {
  return {2.0 * m / g.N - 1.0, 4.0 * xi / (double(g.k) * g.N) + 1.0};
}

} // namespace aztec
