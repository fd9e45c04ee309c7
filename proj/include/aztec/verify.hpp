#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aztec/io.hpp"
#include "aztec/kernels.hpp"

namespace aztec {

// One invariant check: `measured` is the worst deviation seen, `bound` the
// tolerance it was held to.
struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0;
  double bound = 0;
  std::string detail;
};

// rho1 rho2 = 1, magnitude ordering off the gap cuts, unimodularity on them,
// conjugation symmetry, rho1'/rho1 = -rho2'/rho2 (against T'/(2 rho - T)),
// and the ordering of the roots of p. `points` random z plus points/5 on
// the cuts.
CheckResult check_spectral_identities(const SpectralData &sd, std::uint64_t seed, int points);

CheckResult check_kasteleyn(const WeightSpec &s, std::uint64_t seed, int points,
                            double tol = 1e-9);

// +1 around each bounded gap cut, -k around z = 1; residual from rounding.
CheckResult check_windings(const SpectralData &sd, double tol = 0.01);

CheckResult check_switching(std::uint64_t seed, int draws, double tol = 1e-12);

// Every subset of at most `max_order` sites of the diamond kN (kN <= 4):
// kernel determinant against exhaustive enumeration.
CheckResult check_oracle_kernel(const WeightSpec &s, int N, int max_order, FiniteMethod method,
                                double tol = 1e-7);

CheckResult check_shuffle_partition(const WeightSpec &s, int N, double tol = 1e-10);

CheckResult check_smooth_components(const SpectralData &sd, int grid, int threads);

// Centered-difference Burgers residual at steps h and h/10.
CheckResult check_burgers(const SpectralData &sd, double chi, double eta, double h = 1e-3);

// Uniform weighting only: rough kernel against the gauged sine kernel.
CheckResult check_sine(const SpectralData &sd, double chi, double eta, int max_sep,
                       double tol = 1e-9);

// The whole suite, scaled to the model size.
std::vector<CheckResult> verify_model(const Model &m, int threads, std::uint64_t seed = 1);

} // namespace aztec
