#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "aztec/core.hpp"

namespace aztec {

// Real or complex polynomial, ascending coefficients. Trailing exact zeros
// are trimmed; the zero polynomial has one coefficient equal to 0.
template <typename Scalar> class Poly {
public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Poly() : c_(Coeffs::Zero(1)) {}
  explicit Poly(const Coeffs &c) : c_(c) { trim(); }
  Poly(std::initializer_list<Scalar> c) : c_(Coeffs(c.size())) {
    Eigen::Index i = 0;
    for (const Scalar &x : c) c_(i++) = x;
    if (c_.size() == 0) c_ = Coeffs::Zero(1);
    trim();
  }
  static Poly constant(Scalar a) { return Poly({a}); }
  static Poly monomial(int d, Scalar a = Scalar(1)) {
    Coeffs c = Coeffs::Zero(d + 1);
    c(d) = a;
    return Poly(c);
  }
  // (z - r)^d
  static Poly linear_power(Scalar r, int d) {
    Poly out = constant(Scalar(1));
    const Poly f({-r, Scalar(1)});
    for (int i = 0; i < d; ++i) out = out * f;
    return out;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Coeffs &coeffs() const { return c_; }
  Scalar operator[](int i) const { return i < c_.size() ? c_(i) : Scalar(0); }
  Scalar leading() const { return c_(c_.size() - 1); }

  template <typename Arg> auto operator()(const Arg &z) const {
    using R = decltype(Scalar(0) * z);
    R acc = R(c_(c_.size() - 1));
    for (Eigen::Index i = c_.size() - 2; i >= 0; --i) acc = acc * z + c_(i);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() == 1) return Poly();
    Coeffs d(c_.size() - 1);
    for (Eigen::Index i = 1; i < c_.size(); ++i)
      d(i - 1) = c_(i) * Scalar(static_cast<double>(i));
    return Poly(d);
  }

  friend Poly operator+(const Poly &a, const Poly &b) {
    Coeffs c = Coeffs::Zero(std::max(a.c_.size(), b.c_.size()));
    c.head(a.c_.size()) += a.c_;
    c.head(b.c_.size()) += b.c_;
    return Poly(c);
  }
  friend Poly operator-(const Poly &a, const Poly &b) { return a + b * Scalar(-1); }
  friend Poly operator*(const Poly &a, const Poly &b) {
    Coeffs c = Coeffs::Zero(a.c_.size() + b.c_.size() - 1);
    for (Eigen::Index i = 0; i < a.c_.size(); ++i)
      for (Eigen::Index j = 0; j < b.c_.size(); ++j) c(i + j) += a.c_(i) * b.c_(j);
    return Poly(c);
  }
  friend Poly operator*(const Poly &a, Scalar s) { return Poly(Coeffs(a.c_ * s)); }
  friend Poly operator*(Scalar s, const Poly &a) { return a * s; }

  // Long division a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b) {
    const int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    Coeffs r = a.c_;
    Coeffs q = Coeffs::Zero(a.degree() - db + 1);
    for (int i = a.degree() - db; i >= 0; --i) {
      q(i) = r(i + db) / b.leading();
      for (int j = 0; j <= db; ++j) r(i + j) -= q(i) * b.c_(j);
    }
    Coeffs rr = db > 0 ? Coeffs(r.head(db)) : Coeffs::Zero(1);
    return {Poly(q), Poly(rr)};
  }

  // Largest coefficient magnitude; used for relative residual checks.
  double scale() const {
    double s = 0.0;
    for (Eigen::Index i = 0; i < c_.size(); ++i) s = std::max(s, std::abs(c_(i)));
    return s;
  }

private:
  void trim() {
    Eigen::Index n = c_.size();
    while (n > 1 && c_(n - 1) == Scalar(0)) --n;
    if (n != c_.size()) c_.conservativeResize(n);
  }
  Coeffs c_;
};

using RPoly = Poly<double>;

// All complex roots of a real polynomial: companion-matrix eigenvalues, each
// polished by a few Newton steps on the original coefficients.
std::vector<cd> poly_roots(const RPoly &p);

// Newton polish of one root; stops when the step no longer shrinks.
cd newton_polish(const RPoly &p, cd z, int max_iter = 50);

} // namespace aztec
