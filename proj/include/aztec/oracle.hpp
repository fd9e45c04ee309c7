#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "aztec/kernels.hpp"
#include "aztec/sampler.hpp"

namespace aztec {

// Site (m, v) of the kernel: column 2km, height v = 2 xi + i, u = v + kN.
struct Site {
  int m = 0, v = 0;
};

// All tilings of the order-kN diamond (kN <= 6) with their weights. A tiling
// is stored as the sequence of its horizontal/vertical choices in the fixed
// enumeration order, and its particle configuration as an occupancy bitmap.
class EnumeratedLaw {
public:
  using Occupancy = std::array<std::uint64_t, 3>;

  int k = 1, N = 2;
  double Z = 0;

  std::size_t count() const { return weights_.size(); }
  double weight(std::size_t i) const { return weights_[i]; }
  double probability(std::size_t i) const { return weights_[i] / Z; }
  Tiling tiling(std::size_t i) const;
  bool occupied(std::size_t i, int col, int u) const;

private:
  friend EnumeratedLaw enumerate_law(int, int, const std::function<double(const Domino &)> &);
  std::vector<std::uint32_t> choices_;
  std::vector<double> weights_;
  std::vector<Occupancy> occ_;
};

constexpr int kMaxEnumerationSize = 6;

// Generic enumeration with a per-domino weight; throws TooLarge when kN > 6.
EnumeratedLaw enumerate_law(int k, int N, const std::function<double(const Domino &)> &w);
EnumeratedLaw enumerate(const WeightSpec &s, int N);
EnumeratedLaw enumerate_faces(const FaceWeights &f, int N);

// Visits every tiling of the order-M diamond (no weights, no storage).
void for_each_tiling(int M, const std::function<void(const std::vector<Domino> &)> &f);

// Probability that every site is occupied; empty set gives 1.
double exact_correlation(const EnumeratedLaw &law, const std::vector<Site> &points);

// det[K(x_a; x_b)] from finite_kernel blocks.
double kernel_correlation(const WeightSpec &s, int N, const std::vector<Site> &points,
                          FiniteMethod method = FiniteMethod::Quadrature, double tol = 1e-10);

// Second route: non-intersecting paths with an arbitrary number 2n >= kN of
// paths, enumerated column by column. Returns the probability that all
// (column, u) points with u = v + 2n are occupied.
double path_correlation(const WeightSpec &s, int N, int n,
                        const std::vector<std::array<int, 2>> &col_v);

} // namespace aztec
