#include "aztec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace aztec {

namespace {

struct Board {
  int M;
  std::vector<std::array<int, 2>> order; // top row first, left to right
  std::vector<int> index;                 // square -> position, -1 outside
  int at(int x, int y) const {
    if (x < -M || x >= M || y < -M || y >= M) return -1;
    return index[(y + M) * 2 * M + (x + M)];
  }
  explicit Board(int m) : M(m), index(4 * m * m, -1) {
    for (int y = M - 1; y >= -M; --y)
      for (int x = -M; x < M; ++x)
        if (std::abs(2 * x + 1) + std::abs(2 * y + 1) <= 2 * M) {
          index[(y + M) * 2 * M + (x + M)] = static_cast<int>(order.size());
          order.push_back({x, y});
        }
  }
};

// Depth-first search; `bits` records one choice (0 horizontal, 1 vertical)
// per placed domino.
template <typename F>
void search(const Board &b, std::vector<char> &cov, std::vector<Domino> &cur, int i,
            std::uint32_t bits, int depth, F &&emit) {
  const int n = static_cast<int>(b.order.size());
  while (i < n && cov[i]) ++i;
  if (i == n) {
    emit(cur, bits);
    return;
  }
  const auto [x, y] = b.order[i];
  const int r = b.at(x + 1, y);
  if (r >= 0 && !cov[r]) {
    cov[i] = cov[r] = 1;
    cur.push_back({domino_type(b.M, true, x, y), std::int16_t(x), std::int16_t(y)});
    search(b, cov, cur, i + 1, bits, depth + 1, emit);
    cur.pop_back();
    cov[i] = cov[r] = 0;
  }
  const int d = b.at(x, y - 1);
  if (d >= 0 && !cov[d]) {
    cov[i] = cov[d] = 1;
    cur.push_back({domino_type(b.M, false, x, y - 1), std::int16_t(x), std::int16_t(y - 1)});
    search(b, cov, cur, i + 1, bits | (1u << depth), depth + 1, emit);
    cur.pop_back();
    cov[i] = cov[d] = 0;
  }
}

int occ_bit(int M, int col, int u) { return col * 2 * M + (u + M); }

} // namespace

void for_each_tiling(int M, const std::function<void(const std::vector<Domino> &)> &f) {
  if (M > kMaxEnumerationSize) throw Error(Errc::TooLarge, "enumeration limited to kN <= 6");
  Board b(M);
  std::vector<char> cov(b.order.size(), 0);
  std::vector<Domino> cur;
  search(b, cov, cur, 0, 0u, 0, [&](const std::vector<Domino> &d, std::uint32_t) { f(d); });
}

EnumeratedLaw enumerate_law(int k, int N, const std::function<double(const Domino &)> &w) {
  if (N % 2 != 0) throw Error(Errc::OddN, "N must be even");
  const int M = k * N;
  if (M > kMaxEnumerationSize) throw Error(Errc::TooLarge, "enumeration limited to kN <= 6");
  EnumeratedLaw law;
  law.k = k;
  law.N = N;
  Board b(M);
  std::vector<char> cov(b.order.size(), 0);
  std::vector<Domino> cur;
  search(b, cov, cur, 0, 0u, 0, [&](const std::vector<Domino> &ds, std::uint32_t bits) {
    double wt = 1.0;
    for (const Domino &d : ds) wt *= w(d);
    Tiling t;
    t.k = k;
    t.N = N;
    t.dominoes = ds;
    std::sort(t.dominoes.begin(), t.dominoes.end());
    const ParticleConfig pc = tiling_to_paths(t);
    EnumeratedLaw::Occupancy o{};
    for (int c = 0; c <= 2 * M; ++c)
      for (int u : pc.columns[c]) {
        const int bit = occ_bit(M, c, u);
        o[bit / 64] |= std::uint64_t(1) << (bit % 64);
      }
    law.choices_.push_back(bits);
    law.weights_.push_back(wt);
    law.occ_.push_back(o);
    law.Z += wt;
  });
  return law;
}

EnumeratedLaw enumerate(const WeightSpec &s, int N) {
  const int M = s.k * N;
  return enumerate_law(s.k, N, [&](const Domino &d) { return domino_weight(s, M, d); });
}

EnumeratedLaw enumerate_faces(const FaceWeights &f, int N) {
  const int M = f.k * N;
  return enumerate_law(f.k, N, [&](const Domino &d) { return face_domino_weight(f, M, d); });
}

Tiling EnumeratedLaw::tiling(std::size_t i) const {
  const int M = k * N;
  Board b(M);
  std::vector<char> cov(b.order.size(), 0);
  Tiling t;
  t.k = k;
  t.N = N;
  const std::uint32_t bits = choices_[i];
  int depth = 0;
  for (std::size_t j = 0; j < b.order.size(); ++j) {
    if (cov[j]) continue;
    const auto [x, y] = b.order[j];
    if (bits >> depth & 1u) {
      cov[j] = cov[b.at(x, y - 1)] = 1;
      t.dominoes.push_back({domino_type(M, false, x, y - 1), std::int16_t(x), std::int16_t(y - 1)});
    } else {
      cov[j] = cov[b.at(x + 1, y)] = 1;
      t.dominoes.push_back({domino_type(M, true, x, y), std::int16_t(x), std::int16_t(y)});
    }
    ++depth;
  }
  std::sort(t.dominoes.begin(), t.dominoes.end());
  return t;
}

bool EnumeratedLaw::occupied(std::size_t i, int col, int u) const {
  const int M = k * N;
  if (col < 0 || col > 2 * M || u < -M || u >= M) return false;
  const int bit = occ_bit(M, col, u);
  return occ_[i][bit / 64] >> (bit % 64) & 1u;
}

double exact_correlation(const EnumeratedLaw &law, const std::vector<Site> &points) {
  const int M = law.k * law.N;
  std::vector<std::array<int, 2>> cu;
  for (const Site &p : points) {
    if (p.m < 0 || p.m > law.N || p.v < -M || p.v >= 0)
      throw Error(Errc::OutOfRange, "site outside the top part of the diamond");
    cu.push_back({2 * law.k * p.m, p.v + M});
  }
  double acc = 0;
  for (std::size_t i = 0; i < law.count(); ++i) {
    bool all = true;
    for (const auto &c : cu)
      if (!law.occupied(i, c[0], c[1])) {
        all = false;
        break;
      }
    if (all) acc += law.weight(i);
  }
  return acc / law.Z;
}

double kernel_correlation(const WeightSpec &s, int N, const std::vector<Site> &points,
                          FiniteMethod method, double tol) {
  const int n = static_cast<int>(points.size());
  if (n == 0) return 1.0;
  Eigen::MatrixXcd K(n, n);
  auto split = [](int v) {
    const int i = ((v % 2) + 2) % 2;
    return std::array<int, 2>{(v - i) / 2, i};
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto xa = split(points[a].v), xb = split(points[b].v);
      const KernelBlock blk = finite_kernel(s, N, points[a].m, xa[0], points[b].m, xb[0], tol, method);
      K(a, b) = blk.value(xa[1], xb[1]);
    }
  return K.determinant().real();
}

double path_correlation(const WeightSpec &s, int N, int n,
                        const std::vector<std::array<int, 2>> &col_v) {
  const int K = s.k * N, P = 2 * n, T = 2 * K;
  if (P < K) throw Error(Errc::OutOfRange, "need 2n >= kN paths");
  if (P > 8 || K > 4) throw Error(Errc::TooLarge, "path enumeration limited to 8 paths, kN <= 4");
  std::vector<int> end(P);
  for (int i = 0; i < P; ++i) end[i] = -K + i;
  // forward transfer on configurations, tracking the queried event
  using Cfg = std::vector<int>;
  std::map<Cfg, std::array<double, 2>> layer; // [total weight, weight with event so far]
  Cfg start(P);
  for (int i = 0; i < P; ++i) start[i] = i;
  auto hits = [&](int c, const Cfg &cfg) {
    for (const auto &q : col_v)
      if (q[0] == c && !std::binary_search(cfg.begin(), cfg.end(), q[1] + P)) return false;
    return true;
  };
  layer[start] = {1.0, hits(0, start) ? 1.0 : 0.0};
  for (int c = 0; c < T; ++c) {
    const int m = c + 1;
    std::map<Cfg, std::array<double, 2>> next;
    for (const auto &[cfg, w] : layer) {
      auto push = [&](const Cfg &v, double f) {
        auto &slot = next[v];
        slot[0] += w[0] * f;
        slot[1] += w[1] * f;
      };
      if (m % 2 == 1) {
        const int j = (m + 1) / 2;
        const double a = s.a(j), g = s.g(j);
        for (int mask = 0; mask < (1 << P); ++mask) {
          Cfg v(P);
          double f = 1.0;
          bool ok = true;
          for (int i = 0; i < P && ok; ++i) {
            const bool d = mask >> i & 1;
            v[i] = cfg[i] - d;
            if (v[i] < end[i] || (i > 0 && v[i - 1] >= v[i])) ok = false;
            const bool even = ((cfg[i] % 2) + 2) % 2 == 0;
            f *= d ? (even ? a : 1 / a) : (even ? g : 1 / g);
          }
          if (ok) push(v, f);
        }
      } else {
        const double b = s.b(m / 2);
        Cfg v(P);
        std::function<void(int, double)> rec = [&](int i, double f) {
          if (i == P) {
            push(v, f);
            return;
          }
          const int lo = std::max(end[i], i > 0 ? cfg[i - 1] + 1 : end[i]);
          for (int x = lo; x <= cfg[i]; ++x) {
            if (i > 0 && x <= v[i - 1]) continue;
            v[i] = x;
            rec(i + 1, f * std::pow(b, ((x % 2) + 2) % 2 - ((cfg[i] % 2) + 2) % 2));
          }
        };
        rec(0, 1.0);
      }
    }
    for (auto &[cfg, w] : next)
      if (!hits(c + 1, cfg)) w[1] = 0.0;
    layer.swap(next);
  }
  const auto it = layer.find(end);
  if (it == layer.end() || it->second[0] <= 0) throw Error(Errc::OutOfRange, "no admissible paths");
  return it->second[1] / it->second[0];
}

} // namespace aztec
