#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <initializer_list>
#include <span>

namespace isometry {

/// Absolute tolerance used when comparing distances unless a call site
/// supplies its own.
inline constexpr double kDefaultTolerance = 1e-9;

/// A point of R^n (n >= 1) with finite coordinates. The dimension is fixed
/// at construction.
class Point {
 public:
  explicit Point(Eigen::VectorXd coords);
  Point(std::initializer_list<double> coords);

  static Point origin(std::size_t dim);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(coords_.size()); }
  double operator[](std::size_t i) const { return coords_[static_cast<Eigen::Index>(i)]; }
  const Eigen::VectorXd& coords() const noexcept { return coords_; }

  bool operator==(const Point& other) const { return coords_ == other.coords_; }

 private:
  Eigen::VectorXd coords_;
};

/// Which distance is in force: l^p for 1 <= p < inf, or the max metric.
class MetricTag {
 public:
  enum class Kind { Lp, Linf };

  static MetricTag lp(double p);
  static MetricTag linf() noexcept { return MetricTag(Kind::Linf, 0.0); }

  Kind kind() const noexcept { return kind_; }
  bool is_linf() const noexcept { return kind_ == Kind::Linf; }
  /// Only meaningful for Kind::Lp.
  double p() const noexcept { return p_; }
  bool is_lp(double q) const noexcept { return kind_ == Kind::Lp && p_ == q; }

  bool operator==(const MetricTag&) const = default;

 private:
  MetricTag(Kind kind, double p) noexcept : kind_(kind), p_(p) {}

  Kind kind_;
  double p_;
};

/// Accepts p in [1, inf) or +infinity. Values within 1e-12 of 1 snap to 1.
/// Throws InvalidExponentError for p < 1 (with the (1,0),(0,1) witness) and
/// GeometryError(InvalidExponent) for NaN.
MetricTag validate_p(double p);

/// Norm of a raw coordinate vector; the max coordinate is factored out before
/// exponentiation so large inputs do not overflow.
double norm(const MetricTag& m, const Eigen::Ref<const Eigen::VectorXd>& v);
double norm(const MetricTag& m, const Point& v);

/// Throws DimensionMismatch when a and b differ in dimension.
double distance(const MetricTag& m, const Point& a, const Point& b);

/// True iff the closed unit ball has no segment on its boundary, i.e. for
/// l^p with 1 < p < inf.
bool is_strictly_convex(const MetricTag& m) noexcept;

}  // namespace isometry
