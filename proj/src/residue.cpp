#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "aztec/kernels.hpp"
#include "aztec/series.hpp"

namespace aztec {

namespace {

namespace sr = series;
using mp_real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;

template <typename S> sr::Mat<S> mat(double a, double b, double c, double d) {
  sr::Mat<S> m;
  m << S(a), S(b), S(c), S(d);
  return m;
}

// G(t) = prod_j [[g, a t],[1/a, 1/g]] [[1, b t],[1/b, 1]], so Phi(z) = (1-t)^{-k} G(t)
// with t = 1/z.
template <typename S> sr::MatS<S> g_series(const WeightSpec &s) {
  const int L = 2 * s.k + 1;
  sr::MatS<S> G = sr::zeros<S>(1);
  G[0] = sr::Mat<S>::Identity();
  for (int j = 1; j <= s.k; ++j) {
    const double a = s.a(j), b = s.b(j), g = s.g(j);
    const sr::MatS<S> fo{mat<S>(g, 0, 1 / a, 1 / g), mat<S>(0, a, 0, 0)};
    const sr::MatS<S> fe{mat<S>(1, 0, 1 / b, 1), mat<S>(0, b, 0, 0)};
    G = sr::mul(sr::mul(G, fo, L), fe, L);
  }
  return G;
}

template <typename S> sr::Scal<S> one_minus_t_pow(long p, int L) {
  sr::Scal<S> c = sr::binomial<S>(p, L);
  for (int j = 1; j < L; j += 2) c[j] = -c[j];
  return c;
}

template <typename S>
sr::Mat<S> residue_displayed(const WeightSpec &s, int N, int m, int xi, int mp, int xip) {
  const int k = s.k, n = k * N / 2;
  const int e = m - N / 2, ep = N / 2 - mp;
  const sr::MatS<S> G = g_series<S>(s);
  sr::Mat<S> out = sr::Mat<S>::Zero();

  // -1_{m > m'} [t^{xi'-xi}] (1-t)^{-k(m-m')} G^{m-m'}
  if (m > mp && xip - xi >= 0) {
    const int L = xip - xi + 1;
    const sr::MatS<S> Gd = sr::mul(one_minus_t_pow<S>(-long(k) * (m - mp), L),
                                   sr::pow(G, m - mp, L), L);
    out -= Gd[L - 1];
  }

  // z integral: Q(w) = sum_l c_{-xi-1-l} w^l with c_j = [t^j] (1-t)^n Phi^e
  const int Ld = -xi;
  sr::MatS<S> H = G;
  if (e < 0)
    for (auto &x : H) {
      sr::Mat<S> adj;
      adj << x(1, 1), -x(0, 1), -x(1, 0), x(0, 0);
      x = adj;
    }
  const sr::MatS<S> c = sr::mul(one_minus_t_pow<S>(long(k) * (N / 2 - std::abs(e)), Ld),
                                sr::pow(H, std::abs(e), Ld), Ld);

  // w integral: residue at w = 1 + s, pole order P
  const int P = k * (N - mp);
  sr::MatS<S> Qs = sr::zeros<S>(P);
  for (int l = 0; l < Ld; ++l) {
    const sr::Mat<S> &cl = c[-xi - 1 - l];
    const sr::Scal<S> bl = sr::binomial<S>(l, std::min(P, l + 1));
    for (int j = 0; j < int(bl.size()); ++j) Qs[j] += bl[j] * cl;
  }
  // M(1+s) = (w-1)^k Phi(w), linear factors in s
  sr::MatS<S> M = sr::zeros<S>(1);
  M[0] = sr::Mat<S>::Identity();
  for (int j = 1; j <= k; ++j) {
    const double a = s.a(j), b = s.b(j), g = s.g(j);
    const sr::MatS<S> f{mat<S>(g + a / b, g * b + a, 1 / a + 1 / (g * b), b / a + 1 / g),
                        mat<S>(g, 0, 1 / a + 1 / (g * b), 1 / g)};
    M = sr::mul(M, f, P);
  }
  sr::Scal<S> T(P, S(0));
  for (int j = 0; j < std::min<int>(P, M.size()); ++j) T[j] = M[j](0, 0) + M[j](1, 1);
  // det M = s^{2k}; mu1 = T/2 (1 + sqrt(1 - 4 s^{2k}/T^2)), mu2 = s^{2k}/mu1
  const sr::Scal<S> Ti = sr::inv(T, P);
  const sr::Scal<S> T2i = sr::mul(Ti, Ti, P);
  sr::Scal<S> u(P, S(0));
  u[0] = S(1);
  for (int j = 2 * k; j < P; ++j) u[j] -= S(4) * T2i[j - 2 * k];
  sr::Scal<S> sq = sr::sqrt(u, P);
  sq[0] += S(1);
  sr::Scal<S> mu1 = sr::mul(T, sq, P);
  for (auto &x : mu1) x /= S(2);
  const sr::Scal<S> mu1i = sr::inv(mu1, P);
  sr::Scal<S> mu2(P, S(0));
  for (int j = 2 * k; j < P; ++j) mu2[j] = mu1i[j - 2 * k];
  sr::Scal<S> diff(P);
  for (int j = 0; j < P; ++j) diff[j] = mu1[j] - mu2[j];
  const sr::Scal<S> den = sr::inv(diff, P);
  sr::MatS<S> num = sr::zeros<S>(P);
  for (int j = 0; j < P; ++j) {
    if (j < int(M.size())) num[j] = M[j];
    num[j] -= mu2[j] * sr::Mat<S>::Identity();
  }
  const sr::MatS<S> P1 = sr::mul(den, num, P);
  const sr::Scal<S> scal = sr::mul(sr::binomial<S>(long(xip) + n, P), sr::pow(mu1, ep, P), P);
  const sr::MatS<S> br = sr::mul(sr::mul(scal, P1, P), Qs, P);
  out += br[P - 1];
  return out;
}

} // namespace

Mat2c finite_kernel_residue(const WeightSpec &s, int N, int m, int xi, int mp, int xip,
                            int bits) {
  if (bits <= 53) return residue_displayed<double>(s, N, m, xi, mp, xip).cast<cd>();
  const unsigned old = mp_real::default_precision();
  mp_real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1);
  const sr::Mat<mp_real> r = residue_displayed<mp_real>(s, N, m, xi, mp, xip);
  mp_real::default_precision(old);
  Mat2c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = cd(r(i, j).convert_to<double>(), 0.0);
  return out;
}

} // namespace aztec
