#pragma once

#include "isometry/affine.hpp"
#include "isometry/metrics.hpp"

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace isometry::lp {

/// Names of the eight symmetries of the square |x| + |y| = 1.
enum class OcticName {
  Identity,
  ReflectX,         // across the x-axis: (x, y) -> (x, -y)
  ReflectY,         // across the y-axis: (x, y) -> (-x, y)
  ReflectDiag,      // across y = x
  ReflectAntiDiag,  // across y = -x
  Rot90,
  Rot180,
  Rot270,
};

struct OcticElement {
  OcticName name;
  AffineMap map;  // signed permutation matrix, zero translation
};

const char* to_string(OcticName name) noexcept;

/// The eight origin-fixing isometries of the l^p plane for p != 2, in the
/// order of OcticName.
std::vector<OcticElement> octic_group();

OcticElement octic_element(OcticName name);

/// Returns the element whose matrix equals m, if any.
std::optional<OcticName> octic_name_of(const Eigen::Matrix2d& m, double tol = 0.0);

/// f = translate(translation) o fixer with fixer(0) = 0.
struct TranslationSplit {
  Eigen::VectorXd translation;
  AffineMap fixer;
};

TranslationSplit split_translation(const AffineMap& f);

using PointMap = std::function<Point(const Point&)>;

struct Witness {
  Point first;
  Point second;
  double violation;
  std::optional<double> lambda;  // set by the affinity check
};

struct VerificationReport {
  bool verdict;
  std::size_t samples_tested;
  double max_violation;
  /// Present whenever verdict is false: the worst sample, lowest index on ties.
  std::optional<Witness> witness;
};

/// Axis-aligned square [lo, hi]^2 from which random samples are drawn.
struct SampleBox {
  double lo = -10.0;
  double hi = 10.0;
};

/// |d(x, y) - d(f x, f y)|
double isometry_violation(const PointMap& f, const MetricTag& m, const Point& x, const Point& y);

/// Draws n_samples random pairs from the box (seeded, deterministic) and checks
/// |d(x, y) - d(f x, f y)| <= tol on each. Throws InvalidArgument for
/// n_samples == 0.
VerificationReport verify_isometry(const PointMap& f, const MetricTag& m, std::size_t n_samples,
                                   std::uint64_t seed, double tol = kDefaultTolerance,
                                   SampleBox box = {});
VerificationReport verify_isometry(const AffineMap& f, const MetricTag& m, std::size_t n_samples,
                                   std::uint64_t seed, double tol = kDefaultTolerance,
                                   SampleBox box = {});

/// Matches m against the eight signed permutation matrices entrywise within
/// tol. An empty result means m is not an isometry of the metric. Throws
/// InvalidArgument for p = 2, where every orthogonal matrix qualifies.
std::optional<OcticElement> classify_origin_fixing(const Eigen::Matrix2d& m, const MetricTag& metric,
                                                   double tol = kDefaultTolerance);

/// d_T(p1,p2) + d_T(p2,p3) + d_T(p3,p4) + d_T(p4,p1) for four points on the
/// taxicab unit circle in counterclockwise order. The result equals the
/// perimeter of their bounding box and never exceeds 8.
double corner_cycle_sum(std::span<const Eigen::Vector2d, 4> pts);

/// For random x, y and lambda in [0, 1], checks
/// ||f((1-l)x + l y) - ((1-l) f(x) + l f(y))||_m <= tol.
VerificationReport check_midpoint_affinity(const PointMap& f, const MetricTag& m,
                                           std::size_t n_samples, std::uint64_t seed,
                                           double tol = kDefaultTolerance, SampleBox box = {});
VerificationReport check_midpoint_affinity(const AffineMap& f, const MetricTag& m,
                                           std::size_t n_samples, std::uint64_t seed,
                                           double tol = kDefaultTolerance, SampleBox box = {});

struct BallProbe {
  Point witness;  // (1 - lambda) x + lambda y
  std::size_t extra_points_found;
  std::size_t samples_tested;
};

/// Default sweep size: one sample per 1e-3 radian.
inline constexpr std::size_t kDefaultProbeSamples = 6284;

/// Sweeps the boundary of B(x, lambda d) and counts sampled points other than
/// the witness (Euclidean distance > 1e-6) that also lie in B(y, (1-lambda) d)
/// within 1e-9. The seed shifts the sweep phase inside the first angular step;
/// the phase never lands within a quarter step of the witness direction.
BallProbe ball_intersection_probe(const Point& x, const Point& y, double lambda, const MetricTag& m,
                                  std::size_t n_samples = kDefaultProbeSamples,
                                  std::uint64_t seed = 0);

}  // namespace isometry::lp
