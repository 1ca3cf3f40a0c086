#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isometry {

/// Failure categories surfaced by the library. The CLI maps every kind to an
/// exit code and a machine-readable name.
enum class ErrorKind {
  InvalidArgument,
  InvalidExponent,
  DimensionMismatch,
  NonFinite,
  SingularMatrix,
  NotUnitNormal,
  CoincidentPoints,
  CollinearAnchors,
  DegenerateSimplex,
  InconsistentDistances,
  NonCongruent,
  NotAnIsometry,
  UnsupportedDimension,
  NotOnUnitCircle,
  NotCounterclockwise,
  NotOnSphere,
  OutsideDisk,
  NotOrthogonalToBoundary,
  IdenticalMirrors,
  NonpositiveRadius,
  SumTooSmall,
  InvalidGap,
  DegenerateLocus,
  TooFewPoints,
};

std::string_view to_string(ErrorKind kind) noexcept;

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised for p < 1. Carries the triangle-inequality counterexample on the
/// points (1,0), (0,1) and the origin.
class InvalidExponentError : public GeometryError {
 public:
  InvalidExponentError(double p, double direct, double via_origin);

  double exponent() const noexcept { return p_; }
  /// Quasi-distance from (1,0) to (0,1).
  double direct_distance() const noexcept { return direct_; }
  /// Sum of the two legs through the origin (each has length 1).
  double via_origin() const noexcept { return via_origin_; }

 private:
  double p_;
  double direct_;
  double via_origin_;
};

}  // namespace isometry
