#include "isometry/affine.hpp"

#include "isometry/errors.hpp"

#include <Eigen/LU>

#include <cmath>
#include <string>

namespace isometry {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw GeometryError(ErrorKind::DimensionMismatch, std::string(what) + ": dimension " +
                                                          std::to_string(a) + " vs " +
                                                          std::to_string(b));
  }
}

}  // namespace

Hyperplane::Hyperplane(Eigen::VectorXd normal, double offset)
    : normal_(std::move(normal)), offset_(offset) {
  if (!normal_.allFinite() || !std::isfinite(offset_)) {
    throw GeometryError(ErrorKind::NonFinite, "hyperplane data must be finite");
  }
  if (std::abs(normal_.norm() - 1.0) > 1e-12) {
    throw GeometryError(ErrorKind::NotUnitNormal, "hyperplane normal must have unit length");
  }
}

Hyperplane Hyperplane::from_unnormalized(const Eigen::VectorXd& normal, double offset) {
  const double len = normal.norm();
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw GeometryError(ErrorKind::NotUnitNormal, "hyperplane normal must be nonzero");
  }
  return Hyperplane(normal / len, offset / len);
}

bool Hyperplane::same_as(const Hyperplane& other, double tol) const {
  if (dim() != other.dim()) {
    return false;
  }
  auto close = [tol](const Eigen::VectorXd& n1, double c1, const Eigen::VectorXd& n2, double c2) {
    return (n1 - n2).cwiseAbs().maxCoeff() <= tol && std::abs(c1 - c2) <= tol;
  };
  return close(normal_, offset_, other.normal_, other.offset_) ||
         close(normal_, offset_, -other.normal_, -other.offset_);
}

AffineMap::AffineMap(Eigen::MatrixXd matrix, Eigen::VectorXd translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw GeometryError(ErrorKind::DimensionMismatch, "affine matrix must be square");
  }
  require_same_dim(static_cast<std::size_t>(matrix_.rows()),
                   static_cast<std::size_t>(translation_.size()), "affine map");
  if (matrix_.rows() == 0) {
    throw GeometryError(ErrorKind::InvalidArgument, "affine map must have dimension >= 1");
  }
  if (!matrix_.allFinite() || !translation_.allFinite()) {
    throw GeometryError(ErrorKind::NonFinite, "affine map entries must be finite");
  }
  // Hadamard's bound |det M| <= prod ||col_j|| gives a scale-free threshold.
  double scale = 1.0;
  for (Eigen::Index j = 0; j < matrix_.cols(); ++j) {
    scale *= matrix_.col(j).norm();
  }
  if (!(std::abs(matrix_.determinant()) > 1e-12 * scale)) {
    throw GeometryError(ErrorKind::SingularMatrix, "affine matrix is singular");
  }
}

AffineMap AffineMap::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return AffineMap(Eigen::MatrixXd::Identity(n, n), Eigen::VectorXd::Zero(n));
}

AffineMap AffineMap::translation(const Eigen::VectorXd& v) {
  return AffineMap(Eigen::MatrixXd::Identity(v.size(), v.size()), v);
}

AffineMap AffineMap::linear(Eigen::MatrixXd matrix) {
  const auto n = matrix.rows();
  return AffineMap(std::move(matrix), Eigen::VectorXd::Zero(n));
}

AffineMap AffineMap::rotation(double angle, const Eigen::Vector2d& center) {
  Eigen::Matrix2d r;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  r << c, -s, s, c;
  const Eigen::Vector2d b = center - r * center;
  return AffineMap(Eigen::MatrixXd(r), Eigen::VectorXd(b));
}

Point reflect(const Hyperplane& h, const Point& x) {
  require_same_dim(h.dim(), x.dim(), "reflect");
  const double s = h.signed_distance(x.coords());
  return Point(x.coords() - 2.0 * s * h.normal());
}

AffineMap reflection_as_affine(const Hyperplane& h) {
  const auto n = static_cast<Eigen::Index>(h.dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n) - 2.0 * h.normal() * h.normal().transpose();
  return AffineMap(std::move(m), 2.0 * h.offset() * h.normal());
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  require_same_dim(f.dim(), g.dim(), "compose");
  return AffineMap(f.matrix() * g.matrix(), f.matrix() * g.translation() + f.translation());
}

Point apply(const AffineMap& f, const Point& x) {
  require_same_dim(f.dim(), x.dim(), "apply");
  return Point(f(x.coords()));
}

AffineMap invert(const AffineMap& f) {
  Eigen::MatrixXd inv = f.matrix().inverse();
  Eigen::VectorXd t = -(inv * f.translation());
  return AffineMap(std::move(inv), std::move(t));
}

Hyperplane perpendicular_bisector(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim(), "perpendicular_bisector");
  const Eigen::VectorXd diff = b.coords() - a.coords();
  const double len = diff.norm();
  if (!(len > 1e-12)) {
    throw GeometryError(ErrorKind::CoincidentPoints, "perpendicular bisector of coincident points");
  }
  Eigen::VectorXd normal = diff / len;
  // Re-normalize so the unit-length invariant holds to the last bit.
  normal /= normal.norm();
  const double offset = normal.dot(0.5 * (a.coords() + b.coords()));
  return Hyperplane(std::move(normal), offset);
}

double orthogonality_defect(const Eigen::MatrixXd& m) {
  const auto n = m.cols();
  return (m.transpose() * m - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace isometry
