#pragma once

#include "isometry/metrics.hpp"

#include <Eigen/Core>

#include <span>
#include <variant>
#include <vector>

namespace isometry::noneuclid {

// ---------------------------------------------------------------------------
// Sphere model: points are unit vectors of R^3, lines are great circles.
// ---------------------------------------------------------------------------

class SpherePoint {
 public:
  /// Requires ||v||_2 = 1 within 1e-9.
  explicit SpherePoint(const Eigen::Vector3d& v);
  const Eigen::Vector3d& vec() const noexcept { return v_; }

 private:
  Eigen::Vector3d v_;
};

/// The great circle cut out by the plane through the origin with this normal.
class GreatCircle {
 public:
  /// Requires ||normal||_2 = 1 within 1e-12.
  explicit GreatCircle(const Eigen::Vector3d& normal);
  static GreatCircle from_unnormalized(const Eigen::Vector3d& normal);
  const Eigen::Vector3d& normal() const noexcept { return n_; }

 private:
  Eigen::Vector3d n_;
};

/// Arc length along the great circle, in [0, pi].
double sphere_distance(const SpherePoint& u, const SpherePoint& v);

SpherePoint sphere_reflect(const GreatCircle& g, const SpherePoint& x);

/// Product of the Householder matrices, first mirror applied first.
Eigen::Matrix3d compose_sphere_mirrors(std::span<const GreatCircle> mirrors);

// ---------------------------------------------------------------------------
// Poincare disk model: points inside the unit disk, lines are diameters and
// circular arcs orthogonal to the boundary.
// ---------------------------------------------------------------------------

class DiskPoint {
 public:
  /// Rejects ||u||_2 >= 1 - 1e-12.
  explicit DiskPoint(const Eigen::Vector2d& u);
  const Eigen::Vector2d& vec() const noexcept { return u_; }

 private:
  Eigen::Vector2d u_;
};

struct Diameter {
  Eigen::Vector2d direction;  // unit
};

struct OrthoArc {
  Eigen::Vector2d center;  // ||center||^2 = radius^2 + 1
  double radius;
};

using Geodesic = std::variant<Diameter, OrthoArc>;

Geodesic make_diameter(const Eigen::Vector2d& direction);
/// Throws NotOrthogonalToBoundary unless ||center||^2 = radius^2 + 1 within 1e-9.
Geodesic make_arc(const Eigen::Vector2d& center, double radius);

/// Same geodesic: diameters up to direction sign, arcs up to tol.
bool same_geodesic(const Geodesic& a, const Geodesic& b, double tol = kDefaultTolerance);

double hyperbolic_distance(const DiskPoint& u, const DiskPoint& v);

/// Throws CoincidentPoints when u and v coincide.
Geodesic geodesic_through(const DiskPoint& u, const DiskPoint& v);

DiskPoint hyp_reflect(const Geodesic& g, const DiskPoint& x);

/// Applies the mirrors in order, first element first.
DiskPoint apply_hyperbolic_mirrors(std::span<const Geodesic> mirrors, const DiskPoint& x);

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

struct SphereReflection {
  Eigen::Vector3d normal;
};
struct SphereRotation {
  Eigen::Vector3d axis;
  double angle;  // (0, pi]
};
/// Rotatory reflection: reflection in the plane normal to `axis` followed by a
/// rotation about `axis`.
struct SphereGlideReflection {
  Eigen::Vector3d axis;
  double angle;  // (0, pi]
};
struct HypRotation {
  Eigen::Vector2d center;
};
struct Horolation {
  Eigen::Vector2d ideal_point;  // on the unit circle
};
struct HypTranslation {
  Geodesic axis;
};
struct HypReflection {
  Geodesic mirror;
};
struct HypGlideReflection {
  /// Smallest hyperbolic displacement found on the search geodesic.
  double min_displacement;
};

using NonEuclidClass = std::variant<SphereReflection, SphereRotation, SphereGlideReflection,
                                    HypRotation, Horolation, HypTranslation, HypReflection,
                                    HypGlideReflection>;

const char* type_name(const NonEuclidClass& cls) noexcept;

/// Spectral classification of 1..3 great-circle reflections. Throws
/// IdenticalMirrors when the composition is the identity.
NonEuclidClass classify_sphere(std::span<const GreatCircle> mirrors, double tol = kDefaultTolerance);

/// Classifies the composition of reflections in g1 then g2 by how the two
/// geodesics meet: inside the disk, at one ideal point, or not at all.
NonEuclidClass classify_hyperbolic_pair(const Geodesic& g1, const Geodesic& g2,
                                        double tol = kDefaultTolerance);

/// 1..3 mirrors. Consecutive duplicates cancel; an empty remainder throws
/// IdenticalMirrors.
NonEuclidClass classify_hyperbolic(std::span<const Geodesic> mirrors, double tol = kDefaultTolerance);

}  // namespace isometry::noneuclid
