#pragma once

#include <utility>
#include <vector>

#include "aztec/core.hpp"
#include "aztec/model.hpp"
#include "aztec/poly.hpp"

namespace aztec {

enum class Half { Odd, Even };

// phi_{2m-1} (Odd) or phi_{2m} (Even); m counted from 1, cyclic in k.
template <typename Scalar>
typename math_types<Scalar>::Matrix2c
transition_symbol(const WeightSpec &s, int m, Half h, std::complex<Scalar> z) {
  using C = std::complex<Scalar>;
  if (z == C(0)) throw Error(Errc::PoleAtZ, "symbol evaluated at z = 0");
  typename math_types<Scalar>::Matrix2c out;
  if (h == Half::Odd) {
    const Scalar a(s.a(m)), g(s.g(m));
    out << C(g), C(a) / z, C(Scalar(1) / a), C(Scalar(1) / g);
  } else {
    if (z == C(1)) throw Error(Errc::PoleAtZ, "even symbol evaluated at z = 1");
    const Scalar b(s.b(m));
    const C pre = C(1) / (C(1) - C(1) / z);
    out << pre, pre * C(b) / z, pre / C(b), pre;
  }
  return out;
}

// Phi(z) = prod_m phi_{2m-1}(z) phi_{2m}(z), evaluated as
// (z-1)^{-k} prod_m [[g z + a/b, g b + a], [z(1/a + 1/(g b)), b/a + z/g]].
template <typename Scalar>
typename math_types<Scalar>::Matrix2c phi(const WeightSpec &s, std::complex<Scalar> z) {
  using C = std::complex<Scalar>;
  if (z == C(0) || z == C(1)) throw Error(Errc::PoleAtZ, "Phi evaluated at 0 or 1");
  typename math_types<Scalar>::Matrix2c out = math_types<Scalar>::Matrix2c::Identity();
  const C inv = C(1) / (z - C(1));
  for (int m = 1; m <= s.k; ++m) {
    const Scalar a(s.a(m)), b(s.b(m)), g(s.g(m));
    typename math_types<Scalar>::Matrix2c f;
    f << g * z + a / b, C(g * b + a), z * (Scalar(1) / a + Scalar(1) / (g * b)), b / a + z / g;
    out = (out * f * inv).eval();
  }
  return out;
}

// (z-1)^k Phi(z) as a matrix of real polynomials.
std::array<RPoly, 4> scaled_phi_polys(const WeightSpec &s);

struct Interval {
  double lo, hi; // lo may be -inf
};

struct SpectralData {
  WeightSpec spec;
  RPoly trace_poly; // (z-1)^k Tr Phi
  RPoly p, p_plus, p_minus, q, p0;
  RPoly dn; // ((z-1) T' - k T) / q, degree k'-1
  std::vector<double> roots; // s_0 = 0 > s_1 >= s_2 > ..., with multiplicity
  std::vector<double> x;     // simple roots of p0, descending, x_0 = 0
  int k_prime = 1;
  std::vector<Interval> bands; // I_1 .. I_{k'-1}; bands[l-1] = (x_{2l}, x_{2l-1})
  std::vector<Interval> cuts;  // [x_{2l+1}, x_{2l}] for l < k'-1, then (-inf, x_{2k'-2}]

  int k() const { return spec.k; }
  // band index l >= 1 containing real t, or 0 if none
  int band_of(double t) const;
  // true if real t lies on a closed gap cut
  bool on_cut(double t) const;
};

inline constexpr double kClusterTol = 1e-7;

SpectralData discriminant(const WeightSpec &s);

// Continuation of sqrt(p0) from the positive axis, slit along the cuts;
// real z on a cut gives the boundary value from above.
cd p0_sqrt(const SpectralData &sd, cd z);

struct EigenSystem {
  cd z, rho1, rho2;
  Mat2c proj1, proj2;
  bool swapped = false; // rho1 came from T - q sqrt(p0)
};

// Eigenvalues via the discriminant branch, magnitude-labelled.
EigenSystem eigen(const SpectralData &sd, cd z);
// Eigenvalues from trace and determinant of Phi; works for any gamma. The
// label is by magnitude only, so it is meant for points off the cuts.
EigenSystem eigen_direct(const WeightSpec &s, cd z);

// rho1'/rho1 on the same branch as eigen(sd, z).rho1
cd log_derivative_rho1(const SpectralData &sd, cd z);

// det of the magnetically altered 2k x 2k Kasteleyn matrix
cd kasteleyn_charpoly(const WeightSpec &s, cd z, cd lambda);

struct SwitchResult {
  Mat2c lhs, rhs; // both products
  Mat2c left_a, left_b, right_a, right_b;
  cd x;
  double residual; // max entrywise |lhs - rhs|
};

// [[a, b/z],[c, 1/a]] [[al, be/z],[ga, 1/al]]
//   = [[a, ga x/z],[be/x, 1/a]] [[al, c x/z],[b/x, 1/al]]
SwitchResult wiener_hopf_switch(double a, double b, double c, double al, double be,
                                double ga, cd z);

} // namespace aztec
