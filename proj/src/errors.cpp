#include "isometry/errors.hpp"

#include <sstream>

namespace isometry {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotUnitNormal: return "NotUnitNormal";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::CollinearAnchors: return "CollinearAnchors";
    case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorKind::InconsistentDistances: return "InconsistentDistances";
    case ErrorKind::NonCongruent: return "NonCongruent";
    case ErrorKind::NotAnIsometry: return "NotAnIsometry";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::NotOnUnitCircle: return "NotOnUnitCircle";
    case ErrorKind::NotCounterclockwise: return "NotCounterclockwise";
    case ErrorKind::NotOnSphere: return "NotOnSphere";
    case ErrorKind::OutsideDisk: return "OutsideDisk";
    case ErrorKind::NotOrthogonalToBoundary: return "NotOrthogonalToBoundary";
    case ErrorKind::IdenticalMirrors: return "IdenticalMirrors";
    case ErrorKind::NonpositiveRadius: return "NonpositiveRadius";
    case ErrorKind::SumTooSmall: return "SumTooSmall";
    case ErrorKind::InvalidGap: return "InvalidGap";
    case ErrorKind::DegenerateLocus: return "DegenerateLocus";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
  }
  return "Unknown";
}

namespace {

std::string exponent_message(double p, double direct, double via_origin) {
  std::ostringstream os;
  os << "p = " << p << " does not define a metric: d((1,0),(0,1)) = " << direct
     << " exceeds d((1,0),0) + d(0,(0,1)) = " << via_origin;
  return os.str();
}

}  // namespace

InvalidExponentError::InvalidExponentError(double p, double direct, double via_origin)
    : GeometryError(ErrorKind::InvalidExponent, exponent_message(p, direct, via_origin)),
      p_(p),
      direct_(direct),
      via_origin_(via_origin) {}

}  // namespace isometry
