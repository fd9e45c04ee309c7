#include "aztec/core.hpp"

namespace aztec {

const char *errc_name(Errc c) {
  switch (c) {
  case Errc::LengthMismatch: return "LengthMismatch";
  case Errc::NonPositiveWeight: return "NonPositiveWeight";
  case Errc::NotStandardModel: return "NotStandardModel";
  case Errc::PeriodicityViolation: return "PeriodicityViolation";
  case Errc::OddN: return "OddN";
  case Errc::IndexOutOfRange: return "IndexOutOfRange";
  case Errc::PoleAtZ: return "PoleAtZ";
  case Errc::RootImagTooLarge: return "RootImagTooLarge";
  case Errc::OrderingViolation: return "OrderingViolation";
  case Errc::DegenerateSpectrum: return "DegenerateSpectrum";
  case Errc::DivisionResidual: return "DivisionResidual";
  case Errc::ZeroDenominator: return "ZeroDenominator";
  case Errc::DegreeCollapse: return "DegreeCollapse";
  case Errc::UnclassifiablePoint: return "UnclassifiablePoint";
  case Errc::DerivativeSingularity: return "DerivativeSingularity";
  case Errc::NotRough: return "NotRough";
  case Errc::NotSmooth: return "NotSmooth";
  case Errc::NoSmoothRegion: return "NoSmoothRegion";
  case Errc::NoConvergence: return "NoConvergence";
  case Errc::UnsupportedRegion: return "UnsupportedRegion";
  case Errc::NeighborhoodLeavesRough: return "NeighborhoodLeavesRough";
  case Errc::NonIntegerWinding: return "NonIntegerWinding";
  case Errc::MalformedTiling: return "MalformedTiling";
  case Errc::EmptyQuery: return "EmptyQuery";
  case Errc::TooLarge: return "TooLarge";
  case Errc::OutOfRange: return "OutOfRange";
  case Errc::BadFile: return "BadFile";
  }
  return "Unknown";
}

bool errc_is_validation(Errc c) {
  switch (c) {
  case Errc::LengthMismatch:
  case Errc::NonPositiveWeight:
  case Errc::NotStandardModel:
  case Errc::PeriodicityViolation:
  case Errc::OddN:
  case Errc::IndexOutOfRange:
  case Errc::NotRough:
  case Errc::NotSmooth:
  case Errc::NoSmoothRegion:
  case Errc::UnsupportedRegion:
  case Errc::EmptyQuery:
  case Errc::TooLarge:
  case Errc::OutOfRange:
  case Errc::BadFile:
  case Errc::ZeroDenominator:
  case Errc::PoleAtZ:
    return true;
  default:
    return false;
  }
}

} // namespace aztec
