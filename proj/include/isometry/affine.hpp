#pragma once

#include "isometry/metrics.hpp"

#include <Eigen/Core>

#include <cstddef>

namespace isometry {

/// Oriented mirror {x : normal . x = offset} with a unit normal.
class Hyperplane {
 public:
  /// Requires ||normal||_2 = 1 within 1e-12.
  Hyperplane(Eigen::VectorXd normal, double offset);

  /// Normalizes (normal, offset) by ||normal||_2.
  static Hyperplane from_unnormalized(const Eigen::VectorXd& normal, double offset);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(normal_.size()); }
  const Eigen::VectorXd& normal() const noexcept { return normal_; }
  double offset() const noexcept { return offset_; }

  /// Signed Euclidean distance normal . x - offset.
  double signed_distance(const Eigen::VectorXd& x) const { return normal_.dot(x) - offset_; }

  /// Same point set: (normal, offset) agree up to a simultaneous sign flip.
  bool same_as(const Hyperplane& other, double tol = kDefaultTolerance) const;

 private:
  Eigen::VectorXd normal_;
  double offset_;
};

/// x -> matrix * x + translation with an invertible matrix.
///
/// Composition reads right to left: compose(f, g) applies g first, matching
/// the usual mu_C o mu_B o mu_A notation.
class AffineMap {
 public:
  /// Throws SingularMatrix when |det| <= 1e-12 times the product of the column
  /// norms, DimensionMismatch when the shapes disagree.
  AffineMap(Eigen::MatrixXd matrix, Eigen::VectorXd translation);

  static AffineMap identity(std::size_t dim);
  static AffineMap translation(const Eigen::VectorXd& v);
  static AffineMap linear(Eigen::MatrixXd matrix);
  /// Planar rotation by `angle` radians about `center`.
  static AffineMap rotation(double angle, const Eigen::Vector2d& center = Eigen::Vector2d::Zero());

  std::size_t dim() const noexcept { return static_cast<std::size_t>(translation_.size()); }
  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  const Eigen::VectorXd& translation() const noexcept { return translation_; }

  Eigen::VectorXd operator()(const Eigen::VectorXd& x) const { return matrix_ * x + translation_; }

 private:
  Eigen::MatrixXd matrix_;
  Eigen::VectorXd translation_;
};

/// Mirror image x - 2 (normal . x - offset) normal.
Point reflect(const Hyperplane& h, const Point& x);

/// Householder form: matrix I - 2 n n^T, translation 2 offset n.
AffineMap reflection_as_affine(const Hyperplane& h);

/// Applies g first, then f.
AffineMap compose(const AffineMap& f, const AffineMap& g);

Point apply(const AffineMap& f, const Point& x);

AffineMap invert(const AffineMap& f);

/// Mirror exchanging a and b. Throws CoincidentPoints when ||b - a||_2 <= 1e-12.
Hyperplane perpendicular_bisector(const Point& a, const Point& b);

/// max_ij |(M^T M - I)_ij|
double orthogonality_defect(const Eigen::MatrixXd& m);

}  // namespace isometry
