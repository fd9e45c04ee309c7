#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <Eigen/LU>

namespace aztec {

template <typename Scalar> struct math_types {
  using Complex = std::complex<Scalar>;
  using Matrix2s = Eigen::Matrix<Scalar, 2, 2>;
  using Matrix2c = Eigen::Matrix<Complex, 2, 2>;
  using VectorXs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using VectorXc = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
  using MatrixXs = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using MatrixXc = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
};

using cd = std::complex<double>;
using Mat2 = Eigen::Matrix2d;
using Mat2c = Eigen::Matrix2cd;
using VecX = Eigen::VectorXd;
using VecXc = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

// Every failure the library reports. The category decides the CLI exit code.
enum class Errc {
  LengthMismatch,
  NonPositiveWeight,
  NotStandardModel,
  PeriodicityViolation,
  OddN,
  IndexOutOfRange,
  PoleAtZ,
  RootImagTooLarge,
  OrderingViolation,
  DegenerateSpectrum,
  DivisionResidual,
  ZeroDenominator,
  DegreeCollapse,
  UnclassifiablePoint,
  DerivativeSingularity,
  NotRough,
  NotSmooth,
  NoSmoothRegion,
  NoConvergence,
  UnsupportedRegion,
  NeighborhoodLeavesRough,
  NonIntegerWinding,
  MalformedTiling,
  EmptyQuery,
  TooLarge,
  OutOfRange,
  BadFile,
};

const char *errc_name(Errc c);
// true for input problems (exit 3), false for numerical failures (exit 4)
bool errc_is_validation(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

} // namespace aztec
