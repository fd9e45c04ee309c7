#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "aztec/core.hpp"

namespace aztec {

// Circle or circular arc z(t) = center + radius e^{it}. A circle runs over
// [0, 2pi) counterclockwise when orientation = +1; an arc runs from t0 to
// t1 (t1 < t0 means clockwise) and ignores orientation.
struct Contour {
  enum class Kind { Circle, Arc };
  Kind kind = Kind::Circle;
  cd center = 0.0;
  double radius = 1.0;
  double t0 = 0.0, t1 = 2 * kPi;
  int orientation = 1;

  static Contour circle(cd c, double r, int orient = 1) {
    return {Kind::Circle, c, r, 0.0, 2 * kPi, orient};
  }
  static Contour arc(cd c, double r, double from, double to) {
    return {Kind::Arc, c, r, from, to, 1};
  }
  cd point(double t) const { return center + radius * std::polar(1.0, t); }
};

template <typename V> struct QuadResult {
  V value;
  double error = 0.0;
  int nodes = 0;
};

inline double magnitude(const cd &v) { return std::abs(v); }
template <typename Derived> double magnitude(const Eigen::MatrixBase<Derived> &v) {
  return v.cwiseAbs().maxCoeff();
}

inline constexpr int kQuadCap = 1 << 16;

// Trapezoidal rule with nested node doubling. Closed circles use the plain
// periodic rule; arcs first apply s -> s - sin(2 pi s)/(2 pi), whose
// derivative vanishes to second order at both ends, so the endpoints carry
// zero weight and are never evaluated. Stops once successive estimates agree
// to tol * max(1, |value|), or to the rounding floor of the node sum (the
// reported error is then that floor).
template <typename V, typename F>
QuadResult<V> contour_integrate(const F &f, const Contour &c, double tol, int m0 = 32,
                                int cap = kQuadCap) {
  // integrand in the unit-interval variable s, including dz/ds
  auto g = [&](double s) -> V {
    double t, dt;
    if (c.kind == Contour::Kind::Circle) {
      t = 2 * kPi * s;
      dt = 2 * kPi * c.orientation;
    } else {
      const double ph = s - std::sin(2 * kPi * s) / (2 * kPi);
      const double dph = 1.0 - std::cos(2 * kPi * s);
      t = c.t0 + (c.t1 - c.t0) * ph;
      dt = (c.t1 - c.t0) * dph;
    }
    const cd e = std::polar(1.0, t);
    const cd z = c.center + c.radius * e;
    const cd dz = cd(0.0, 1.0) * c.radius * e * dt;
    return V(f(z) * dz);
  };
  const bool arc = c.kind == Contour::Kind::Arc;
  int m = m0;
  // running sums over nodes j/m, j = 0..m-1 (the s = 0 node is skipped on
  // arcs); `mass` tracks sum |g|, whose rounding error floors the estimate
  const int j0 = arc ? 1 : 0;
  V sum = g(double(j0) / m);
  double mass = magnitude(sum);
  for (int j = j0 + 1; j < m; ++j) {
    const V v = g(double(j) / m);
    mass += magnitude(v);
    sum += v;
  }
  V est = sum / double(m);
  for (;;) {
    V add = g(0.5 / m);
    mass += magnitude(add);
    for (int j = 1; j < m; ++j) {
      const V v = g((j + 0.5) / m);
      mass += magnitude(v);
      add += v;
    }
    sum += add;
    m *= 2;
    const V next = sum / double(m);
    const double err = magnitude(V(next - est));
    const double floor = 64 * std::numeric_limits<double>::epsilon() * mass / m;
    if (err <= std::max(tol * std::max(1.0, magnitude(next)), floor))
      return {next, std::max(err, floor), m};
    if (m >= cap)
      throw Error(Errc::NoConvergence,
                  "quadrature did not settle with " + std::to_string(m) + " nodes");
    est = next;
  }
}

} // namespace aztec
