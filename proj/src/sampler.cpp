#include "aztec/sampler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

namespace aztec {

const char *domino_name(DominoType t) {
  switch (t) {
  case DominoType::N: return "N";
  case DominoType::S: return "S";
  case DominoType::E: return "E";
  case DominoType::W: return "W";
  }
  return "?";
}

bool square_shaded(int M, int x, int y) { return ((x + y + M + 1) % 2 + 2) % 2 == 0; }

DominoType domino_type(int M, bool horizontal, int x, int y) {
  const bool sh = square_shaded(M, x, y);
  if (horizontal) return sh ? DominoType::S : DominoType::N;
  return sh ? DominoType::W : DominoType::E;
}

namespace {

struct Step {
  int s, t;
  char kind; // 'h' stay, 'd' diagonal drop, 'v' vertical drop
};

// Path step carried by a domino, in rotated coordinates (s', t').
bool domino_step(int M, const Domino &d, Step &out) {
  if (d.type == DominoType::N) return false;
  int sx = d.x, sy = d.y;
  if (d.type == DominoType::E) sy += 1;
  out.s = (sx + sy + M + 1) / 2;
  out.t = (sy - sx + M + 1) / 2;
  out.kind = d.type == DominoType::W ? 'h' : d.type == DominoType::S ? 'd' : 'v';
  return true;
}

std::array<std::array<int, 2>, 2> squares_of(const Domino &d) {
  if (d.horizontal()) return {{{d.x, d.y}, {d.x + 1, d.y}}};
  return {{{d.x, d.y}, {d.x, d.y + 1}}};
}

bool inside(int M, int x, int y) { return std::abs(2 * x + 1) + std::abs(2 * y + 1) <= 2 * M; }

} // namespace

double domino_weight(const WeightSpec &s, int M, const Domino &d) {
  Step st;
  if (!domino_step(M, d, st)) return 1.0;
  const int v = st.t - 1 - M;
  const double sg = (v % 2 == 0) ? 1.0 : -1.0;
  if (st.kind == 'h') return std::pow(s.g(st.s + 1), sg);
  if (st.kind == 'd') return std::pow(s.a(st.s + 1), sg);
  return std::pow(s.b(st.s), sg);
}

double face_domino_weight(const FaceWeights &f, int M, const Domino &d) {
  const int x = d.x + M, y = d.y + M;
  if (d.horizontal()) return f(x, y) * f(x, y - 1);
  return f(x - 1, y) * f(x, y);
}

void validate_tiling(const Tiling &t) {
  const int M = t.size();
  std::vector<int> cover(4 * M * M, 0);
  for (const Domino &d : t.dominoes) {
    if (domino_type(M, d.horizontal(), d.x, d.y) != d.type)
      throw Error(Errc::MalformedTiling, "domino type disagrees with the coloring");
    for (const auto &q : squares_of(d)) {
      if (!inside(M, q[0], q[1])) throw Error(Errc::MalformedTiling, "domino leaves the diamond");
      ++cover[(q[1] + M) * 2 * M + (q[0] + M)];
    }
  }
  for (int y = -M; y < M; ++y)
    for (int x = -M; x < M; ++x) {
      const int c = cover[(y + M) * 2 * M + (x + M)];
      if (c != (inside(M, x, y) ? 1 : 0))
        throw Error(Errc::MalformedTiling, "square covered " + std::to_string(c) + " times");
    }
}

namespace {

// Weights of the four blocks of every Propp cell, one table per order. Cell
// (p, q) is the 2x2 block with upper-right square (p, q); its classes repeat
// under the face lattice, so a table of 4k entries suffices.
struct CellWeights {
  std::array<double, 4> w; // indexed by DominoType
  double delta() const { return w[0] * w[1] + w[2] * w[3]; }
};

Domino cell_domino(int p, int q, DominoType t) {
  switch (t) {
  case DominoType::N: return {t, std::int16_t(p - 1), std::int16_t(q)};
  case DominoType::S: return {t, std::int16_t(p - 1), std::int16_t(q - 1)};
  case DominoType::E: return {t, std::int16_t(p), std::int16_t(q - 1)};
  case DominoType::W: return {t, std::int16_t(p - 1), std::int16_t(q - 1)};
  }
  return {t, 0, 0};
}

std::vector<std::vector<CellWeights>> shuffle_weights(const WeightSpec &s, int M) {
  const int k = s.k, nc = 4 * k;
  std::vector<std::vector<CellWeights>> W(M + 1, std::vector<CellWeights>(nc));
  for (int c = 0; c < nc; ++c) {
    const auto r = FaceWeights::representative(k, c);
    for (int t = 0; t < 4; ++t)
      W[M][c].w[t] = domino_weight(s, M, cell_domino(r[0], r[1], DominoType(t)));
  }
  static constexpr int kShift[4][2] = {{0, 1}, {0, -1}, {1, 0}, {-1, 0}}; // N S E W
  for (int m = M; m > 1; --m)
    for (int c = 0; c < nc; ++c) {
      const auto r = FaceWeights::representative(k, c);
      for (int t = 0; t < 4; ++t) {
        const CellWeights &src =
            W[m][FaceWeights::class_index(k, r[0] + kShift[t][0], r[1] + kShift[t][1])];
        W[m - 1][c].w[t] = src.w[t] / src.delta();
      }
    }
  return W;
}

template <typename F> void for_cells(int m, F f) {
  for (int p = -(m - 1); p <= m - 1; ++p)
    for (int q = -(m - 1 - std::abs(p)); q <= m - 1 - std::abs(p); q += 2) f(p, q);
}

} // namespace

double shuffle_log_partition(const WeightSpec &s, int N) {
  const int M = geometry(s, N).size();
  const auto W = shuffle_weights(s, M);
  double lz = 0;
  for (int m = 1; m <= M; ++m)
    for_cells(m, [&](int p, int q) { lz += std::log(W[m][FaceWeights::class_index(s.k, p, q)].delta()); });
  return lz;
}

Tiling sample_tiling(const WeightSpec &s, int N, std::uint64_t seed, std::uint64_t stream) {
  const int M = geometry(s, N).size();
  const int k = s.k;
  const auto W = shuffle_weights(s, M);
  std::seed_seq sq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(stream),
                   std::uint32_t(stream >> 32)};
  std::mt19937_64 rng(sq);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  struct Piece {
    int p, q;
    DominoType t;
  };
  std::vector<Piece> cur;
  const int span = 2 * M + 4, off = M + 2;
  std::vector<std::int8_t> at(4 * span * span); // [type][p][q] presence
  std::vector<std::int8_t> occ(span * span);
  auto idx = [&](int p, int q) { return (q + off) * span + (p + off); };

  for (int m = 1; m <= M; ++m) {
    // destruction of facing pairs, then sliding
    std::fill(at.begin(), at.end(), 0);
    for (const Piece &c : cur) at[int(c.t) * span * span + idx(c.p, c.q)] = 1;
    auto has = [&](DominoType t, int p, int q) {
      return at[int(t) * span * span + idx(p, q)] != 0;
    };
    std::vector<Piece> next;
    next.reserve(cur.size() + 2 * m);
    for (const Piece &c : cur) {
      const bool dead = (c.t == DominoType::N && has(DominoType::S, c.p, c.q + 2)) ||
                        (c.t == DominoType::S && has(DominoType::N, c.p, c.q - 2)) ||
                        (c.t == DominoType::E && has(DominoType::W, c.p + 2, c.q)) ||
                        (c.t == DominoType::W && has(DominoType::E, c.p - 2, c.q));
      if (dead) continue;
      Piece d = c;
      if (c.t == DominoType::N) ++d.q;
      else if (c.t == DominoType::S) --d.q;
      else if (c.t == DominoType::E) ++d.p;
      else --d.p;
      next.push_back(d);
    }
    std::fill(occ.begin(), occ.end(), 0);
    for (const Piece &c : next)
      for (const auto &q : squares_of(cell_domino(c.p, c.q, c.t))) ++occ[idx(q[0], q[1])];
    // creation in empty cells
    for_cells(m, [&](int p, int q) {
      if (occ[idx(p - 1, q - 1)] || occ[idx(p, q - 1)] || occ[idx(p - 1, q)] || occ[idx(p, q)])
        return;
      const CellWeights &cw = W[m][FaceWeights::class_index(k, p, q)];
      const double ns = cw.w[0] * cw.w[1];
      if (unif(rng) * cw.delta() < ns) {
        next.push_back({p, q, DominoType::N});
        next.push_back({p, q, DominoType::S});
      } else {
        next.push_back({p, q, DominoType::E});
        next.push_back({p, q, DominoType::W});
      }
      occ[idx(p - 1, q - 1)] = occ[idx(p, q - 1)] = occ[idx(p - 1, q)] = occ[idx(p, q)] = 1;
    });
    cur.swap(next);
    if (static_cast<int>(cur.size()) != m * (m + 1))
      throw Error(Errc::MalformedTiling, "shuffling lost coverage at order " + std::to_string(m));
  }

  Tiling t;
  t.k = k;
  t.N = N;
  t.seed = seed;
  t.stream = stream;
  for (const Piece &c : cur) t.dominoes.push_back(cell_domino(c.p, c.q, c.t));
  std::sort(t.dominoes.begin(), t.dominoes.end());
  validate_tiling(t);
  return t;
}

bool ParticleConfig::has(int col, int u) const {
  const auto &c = columns[col];
  return std::binary_search(c.begin(), c.end(), u);
}

ParticleConfig tiling_to_paths(const Tiling &t) {
  const int M = t.size();
  const int two_n = M;
  // step kind per rotated node (s, t), s in [0, M], t in [0, M]
  std::vector<char> st((M + 1) * (M + 2), 0);
  for (const Domino &d : t.dominoes) {
    Step s;
    if (!domino_step(M, d, s)) continue;
    if (s.s < 0 || s.s > M || s.t < 0 || s.t > M + 1)
      throw Error(Errc::MalformedTiling, "path step outside the diamond");
    st[s.s * (M + 2) + s.t] = s.kind;
  }
  std::vector<std::vector<int>> cols(2 * M + 1);
  const int shift = two_n; // u = v + 2n
  for (int j = 1; j <= M; ++j) {
    int s = 0, tt = j;
    cols[0].push_back(tt - 1 - M + shift);
    while (tt > 0) {
      if (s > M) throw Error(Errc::MalformedTiling, "path runs off the right edge");
      const char kind = st[s * (M + 2) + tt];
      if (kind == 0) throw Error(Errc::MalformedTiling, "path breaks off");
      if (kind == 'v') {
        --tt;
        continue;
      }
      if (s > 0) cols[2 * s].push_back(tt - 1 - M + shift);
      ++s;
      if (kind == 'd') --tt;
      if (tt >= 1) cols[2 * s - 1].push_back(tt - 1 - M + shift);
    }
  }
  // Below u = 0: exactly c/2 paths have left the top part by even column c,
  // possibly one more at an odd column (sitting at u = -1). Path j rests at
  // its final height -M + j - 1 from the first even column after it leaves.
  for (int c = 0; c <= 2 * M; ++c) {
    const int below = M - static_cast<int>(cols[c].size());
    const int settled = c / 2;
    if (below != settled && !(c % 2 == 1 && below == settled + 1))
      throw Error(Errc::MalformedTiling, "wrong number of paths below the top part");
    for (int j = 1; j <= settled; ++j) cols[c].push_back(-M + j - 1);
    if (below > settled) cols[c].push_back(-1);
  }
  ParticleConfig pc;
  pc.k = t.k;
  pc.N = t.N;
  for (auto &c : cols) {
    std::sort(c.begin(), c.end());
    if (static_cast<int>(c.size()) != two_n ||
        std::adjacent_find(c.begin(), c.end()) != c.end())
      throw Error(Errc::MalformedTiling, "column does not hold 2n distinct points");
  }
  pc.columns = std::move(cols);
  return pc;
}

int height_count(const ParticleConfig &c, int col, int u) {
  const auto &v = c.columns[col];
  return static_cast<int>(v.end() - std::lower_bound(v.begin(), v.end(), u));
}

std::vector<Estimate> empirical_stats(const std::vector<ParticleConfig> &configs,
                                      const std::vector<StatQuery> &queries) {
  if (queries.empty()) throw Error(Errc::EmptyQuery, "no queries");
  if (configs.size() < 2) throw Error(Errc::EmptyQuery, "need at least two configurations");
  std::vector<Estimate> out;
  const double n = double(configs.size());
  for (const StatQuery &q : queries) {
    double s1 = 0, s2 = 0;
    for (const ParticleConfig &c : configs) {
      double x = 0;
      if (q.kind == StatQuery::Kind::Height) x = height_count(c, q.col, q.u);
      else if (q.kind == StatQuery::Kind::Occupation) x = c.has(q.col, q.u);
      else x = c.has(q.col, q.u) && c.has(q.col2, q.u2);
      s1 += x;
      s2 += x * x;
    }
    const double mean = s1 / n;
    const double var = std::max(0.0, (s2 - n * mean * mean) / (n - 1));
    out.push_back({mean, std::sqrt(var / n)});
  }
  return out;
}

std::string render_svg(const Tiling &t, double cell) {
  const int M = t.size();
  // colour by type and by parity of the weight period along the diagonal
  static const char *kColors[8] = {"#d7301f", "#fc8d59", "#2b8cbe", "#a6bddb",
                                   "#31a354", "#a1d99b", "#fec44f", "#fff7bc"};
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  const double W = 2 * M * cell;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << W
     << "\" viewBox=\"0 0 " << W << " " << W << "\">\n";
  for (const Domino &d : t.dominoes) {
    const int par = ((d.x + d.y + M) / 2 % 2 + 2) % 2;
    const int cls = 2 * int(d.type) + par;
    const double x = (d.x + M) * cell, y = (M - d.y - 1 - (d.horizontal() ? 0 : 1)) * cell;
    const double w = (d.horizontal() ? 2 : 1) * cell, h = (d.horizontal() ? 1 : 2) * cell;
    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
       << "\" fill=\"" << kColors[cls] << "\" stroke=\"#000\" stroke-width=\"0.3\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace aztec
