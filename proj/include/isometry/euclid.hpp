#pragma once

#include "isometry/affine.hpp"
#include "isometry/metrics.hpp"

#include <Eigen/Core>

#include <array>
#include <span>
#include <variant>
#include <vector>

namespace isometry::euclid {

/// Images of n+1 affinely independent reference points under a Euclidean
/// isometry of R^n. Validated at construction: the sources span a simplex and
/// all pairwise distances agree with the targets' within 1e-9 (1 + scale).
class Correspondence {
 public:
  /// Throws CollinearAnchors (n = 2) or DegenerateSimplex (n != 2) for a flat
  /// source simplex, NonCongruent when distances disagree.
  Correspondence(std::vector<Point> sources, std::vector<Point> targets);

  /// Images of the canonical simplex 0, e_1, ..., e_n under f.
  static Correspondence from_map(const AffineMap& f);

  std::size_t dim() const noexcept { return sources_.front().dim(); }
  const std::vector<Point>& sources() const noexcept { return sources_; }
  const std::vector<Point>& targets() const noexcept { return targets_; }

 private:
  std::vector<Point> sources_;
  std::vector<Point> targets_;
};

struct Identity {};
struct Translation {
  Eigen::Vector2d vector;
};
struct Rotation {
  Eigen::Vector2d center;
  double angle;  // (-pi, pi], nonzero
};
struct Reflection {
  Hyperplane axis;
};
struct GlideReflection {
  Hyperplane axis;
  Eigen::Vector2d glide;  // nonzero, parallel to the axis
};

using IsometryClass = std::variant<Identity, Translation, Rotation, Reflection, GlideReflection>;

enum class Parity { Direct, Indirect };

/// Which composition pattern a short mirror list falls into.
enum class MirrorPattern {
  Empty,
  Single,
  CoincidentPair,
  ParallelPair,
  IntersectingPair,
  ParallelTriple,
  ConcurrentTriple,
  GeneralTriple,
};

struct SequenceClassification {
  IsometryClass result;
  MirrorPattern pattern;
};

/// The unique point at the given Euclidean distances from three non-collinear
/// anchors. Intersects the circles about the first two anchors and keeps the
/// candidate that best matches the third.
Point locate_by_distances(std::span<const Point, 3> anchors, std::span<const double, 3> dists,
                          double tol = kDefaultTolerance);

/// Mirrors, in application order, whose composition carries every source to
/// its target. At most n+1 mirrors. Planar correspondences only; see
/// decompose_nd for other dimensions.
std::vector<Hyperplane> decompose(const Correspondence& c);

/// Same sweep for any dimension n >= 1.
std::vector<Hyperplane> decompose_nd(const Correspondence& c);

/// Composes mirrors given in application order (first element acts first).
AffineMap compose_mirrors(std::span<const Hyperplane> mirrors, std::size_t dim);

IsometryClass classify(const AffineMap& f, double tol = kDefaultTolerance);

SequenceClassification classify_reflection_sequence(std::span<const Hyperplane> mirrors,
                                                    double tol = kDefaultTolerance);

Parity parity(const AffineMap& f, double tol = kDefaultTolerance);

/// Inverse of classify: builds the affine map a class describes.
AffineMap synthesize(const IsometryClass& cls);

const char* to_string(MirrorPattern pattern) noexcept;
const char* type_name(const IsometryClass& cls) noexcept;

}  // namespace isometry::euclid
