#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "aztec/core.hpp"

namespace aztec {

// 2 x k periodic weighting of the path model. gamma defaults to all ones.
struct WeightSpec {
  int k = 1;
  std::vector<double> alpha, beta, gamma;
  bool standard = true; // gamma == 1 and prod(alpha) == prod(beta)

  // cyclic accessors, j counted from 1 as in the weight tables
  double a(int j) const { return alpha[mod(j - 1)]; }
  double b(int j) const { return beta[mod(j - 1)]; }
  double g(int j) const { return gamma[mod(j - 1)]; }
  int mod(int j) const { return ((j % k) + k) % k; }

  bool operator==(const WeightSpec &o) const {
    return k == o.k && alpha == o.alpha && beta == o.beta && gamma == o.gamma &&
           standard == o.standard;
  }
};

inline constexpr double kStandardTol = 1e-12;

WeightSpec make_spec(int k, std::vector<double> alpha, std::vector<double> beta,
                     std::vector<double> gamma = {});
// Accepts {k, alpha, beta, gamma?}. A "faces" table, if present, is handled by
// load_model (io) and not here.
WeightSpec validate_spec(const nlohmann::json &raw);
nlohmann::json spec_to_json(const WeightSpec &s);
void require_standard(const WeightSpec &s);

// Face weights on one fundamental domain of the lattice spanned by (2,-2) and
// (k,k). The 4k classes are keyed by s = (i+j) mod 2k and d = (i-j) mod 4,
// with s = d (mod 2); the flat index is 2s + d/2.
struct FaceWeights {
  int k = 1;
  std::vector<double> table; // size 4k, indexed by class_index

  static int class_index(int k, int i, int j);
  // representative (i,j) of a class index
  static std::array<int, 2> representative(int k, int idx);
  double operator()(int i, int j) const { return table[class_index(k, i, j)]; }
};

// Builds a FaceWeights from explicit (i,j,a) entries; every class must be
// covered and repeated entries of one class must agree exactly.
FaceWeights faces_from_entries(int k, const std::vector<std::array<double, 3>> &entries);

struct GaugeResult {
  std::vector<double> alpha, beta, gamma_hat, delta_hat;
};

// The four ratio formulas of the gauge appendix, evaluated for a diamond of
// size kN (the offsets depend on kN modulo the lattice).
GaugeResult gauge_from_faces(const FaceWeights &f, int N);

// Path-model spec whose measure equals the face-weighted tiling measure under
// our geometric conventions: alpha and beta from the gauge, inverted.
WeightSpec path_spec_from_faces(const FaceWeights &f, int N);

// Diamond of size kN with N even; n = kN/2 paths pairs.
struct DiamondGeometry {
  int k = 1, N = 2;
  int size() const { return k * N; }
  int n() const { return k * N / 2; }
  int m_min() const { return 1; }
  int m_max() const { return N - 1; }
  int xi_min() const { return -k * N / 2; }
  int xi_max() const { return -1; }
  bool in_range(int m, int xi) const {
    return m >= m_min() && m <= m_max() && xi >= xi_min() && xi <= xi_max();
  }
};

DiamondGeometry geometry(const WeightSpec &s, int N);

// (chi,eta) + local offsets -> integer (m, xi), with e_chi, e_eta in [0,1).
struct LocalIndex {
  int m, xi;
  double e_chi, e_eta;
};
LocalIndex to_local(const DiamondGeometry &g, double chi, double eta, int kappa = 0,
                    int zeta = 0);
// inverse with zero offsets: chi = 2m/N - 1, eta = 4 xi/(kN) + 1
std::array<double, 2> to_global(const DiamondGeometry &g, int m, int xi);

} // namespace aztec
