#pragma once

#include <vector>

#include <Eigen/Core>

namespace aztec::series {

// Truncated power series in one variable, ascending; scalar or 2x2 matrix
// coefficients. Every operation truncates to the requested length L.
template <typename S> using Scal = std::vector<S>;
template <typename S> using Mat = Eigen::Matrix<S, 2, 2>;
template <typename S> using MatS = std::vector<Mat<S>>;

template <typename S> MatS<S> zeros(int L) { return MatS<S>(L, Mat<S>::Zero()); }

template <typename S> MatS<S> mul(const MatS<S> &a, const MatS<S> &b, int L) {
  MatS<S> out = zeros<S>(L);
  for (int i = 0; i < std::min<int>(L, a.size()); ++i)
    for (int j = 0; j < std::min<int>(L - i, b.size()); ++j) out[i + j].noalias() += a[i] * b[j];
  return out;
}

template <typename S> MatS<S> mul(const Scal<S> &a, const MatS<S> &b, int L) {
  MatS<S> out = zeros<S>(L);
  for (int i = 0; i < std::min<int>(L, a.size()); ++i)
    for (int j = 0; j < std::min<int>(L - i, b.size()); ++j) out[i + j] += a[i] * b[j];
  return out;
}

template <typename S> Scal<S> mul(const Scal<S> &a, const Scal<S> &b, int L) {
  Scal<S> out(L, S(0));
  for (int i = 0; i < std::min<int>(L, a.size()); ++i)
    for (int j = 0; j < std::min<int>(L - i, b.size()); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// requires a[0] != 0
template <typename S> Scal<S> inv(const Scal<S> &a, int L) {
  Scal<S> out(L, S(0));
  out[0] = S(1) / a[0];
  for (int n = 1; n < L; ++n) {
    S s(0);
    for (int j = 1; j <= std::min<int>(n, int(a.size()) - 1); ++j) s += a[j] * out[n - j];
    out[n] = -s * out[0];
  }
  return out;
}

// requires a[0] > 0; principal root at 0
template <typename S> Scal<S> sqrt(const Scal<S> &a, int L) {
  using std::sqrt;
  Scal<S> out(L, S(0));
  out[0] = sqrt(a[0]);
  const S half_inv = S(1) / (S(2) * out[0]);
  for (int n = 1; n < L; ++n) {
    S s = n < int(a.size()) ? a[n] : S(0);
    for (int j = 1; j < n; ++j) s -= out[j] * out[n - j];
    out[n] = s * half_inv;
  }
  return out;
}

template <typename S> Scal<S> pow(Scal<S> a, long e, int L) {
  if (e < 0) {
    a = inv(a, L);
    e = -e;
  }
  Scal<S> r(L, S(0));
  r[0] = S(1);
  while (e > 0) {
    if (e & 1) r = mul(r, a, L);
    e >>= 1;
    if (e) a = mul(a, a, L);
  }
  return r;
}

template <typename S> MatS<S> pow(MatS<S> a, long e, int L) {
  MatS<S> r = zeros<S>(L);
  r[0] = Mat<S>::Identity();
  while (e > 0) {
    if (e & 1) r = mul(r, a, L);
    e >>= 1;
    if (e) a = mul(a, a, L);
  }
  return r;
}

// coefficients of (1 + s)^p for integer p (any sign)
template <typename S> Scal<S> binomial(long p, int L) {
  Scal<S> out(L, S(0));
  S c(1);
  for (int j = 0; j < L; ++j) {
    out[j] = c;
    c = c * S(p - j) / S(j + 1);
  }
  return out;
}

} // namespace aztec::series
