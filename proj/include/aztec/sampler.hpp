#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aztec/model.hpp"

namespace aztec {

enum class DominoType : std::uint8_t { N, S, E, W };
const char *domino_name(DominoType t);

// Squares are unit squares with lower-left corner (x, y), |x+1/2| + |y+1/2| <= M.
// A domino is stored by its lower-left square; N/S are horizontal, E/W vertical.
struct Domino {
  DominoType type;
  std::int16_t x, y;
  bool horizontal() const { return type == DominoType::N || type == DominoType::S; }
  bool operator==(const Domino &o) const = default;
  auto operator<=>(const Domino &o) const = default;
};

struct Tiling {
  int k = 1, N = 2;
  std::vector<Domino> dominoes; // sorted
  std::uint64_t seed = 0, stream = 0;
  int size() const { return k * N; }
};

// Square (x, y) is shaded iff x + y + M + 1 is even.
bool square_shaded(int M, int x, int y);
// N/S by the shading of the left square, W/E by the bottom square.
DominoType domino_type(int M, bool horizontal, int x, int y);

// Path-model weight of one domino in the order-M diamond (1 for N).
double domino_weight(const WeightSpec &s, int M, const Domino &d);
// Face-weighted measure: product of the two faces adjacent to the edge.
double face_domino_weight(const FaceWeights &f, int M, const Domino &d);

void validate_tiling(const Tiling &t); // throws MalformedTiling

// Exact sample by weighted domino shuffling; (seed, stream) fixes the RNG.
Tiling sample_tiling(const WeightSpec &s, int N, std::uint64_t seed, std::uint64_t stream = 0);

// log Z of the order-kN diamond from the shuffling weight reduction
double shuffle_log_partition(const WeightSpec &s, int N);

// Occupied heights u (ascending) in every column 0..2kN; 2n = kN paths.
struct ParticleConfig {
  int k = 1, N = 2;
  std::vector<std::vector<int>> columns;
  int n() const { return k * N / 2; }
  bool has(int col, int u) const;
  bool operator==(const ParticleConfig &o) const = default;
  auto operator<=>(const ParticleConfig &o) const = default;
};

ParticleConfig tiling_to_paths(const Tiling &t);

// h(u, v) = #{points (u, v0) with v0 >= v}
int height_count(const ParticleConfig &c, int col, int u);

struct StatQuery {
  enum class Kind { Height, Occupation, Pair };
  Kind kind = Kind::Occupation;
  int col = 0, u = 0;   // Height: threshold u; others: the site
  int col2 = 0, u2 = 0; // Pair only
};

struct Estimate {
  double mean = 0, stderr_ = 0;
};

std::vector<Estimate> empirical_stats(const std::vector<ParticleConfig> &configs,
                                      const std::vector<StatQuery> &queries);

std::string render_svg(const Tiling &t, double cell = 8.0);

} // namespace aztec
