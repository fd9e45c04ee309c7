#include "aztec/poly.hpp"

#include <Eigen/Eigenvalues>

namespace aztec {

cd newton_polish(const RPoly &p, cd z, int max_iter) {
  const RPoly dp = p.derivative();
  double last = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iter; ++it) {
    const cd d = dp(z);
    if (d == 0.0) break;
    const cd step = p(z) / d;
    const double s = std::abs(step);
    if (!(s < last)) break;
    z -= step;
    last = s;
    if (s <= 1e-16 * (1.0 + std::abs(z))) break;
  }
  return z;
}

std::vector<cd> poly_roots(const RPoly &p) {
  const int n = p.degree();
  std::vector<cd> out;
  if (n < 1) return out;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -p[i] / p.leading();
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  const Eigen::VectorXcd ev = es.eigenvalues();
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    cd z = newton_polish(p, ev(i));
    // polishing near a double root can wander to the twin; keep the
    // companion value when Newton makes the residual worse
    if (std::abs(p(z)) > std::abs(p(ev(i)))) z = ev(i);
    out.push_back(z);
  }
  return out;
}

} // namespace aztec
