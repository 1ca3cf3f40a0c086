#include "isometry/metrics.hpp"

#include "isometry/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace isometry {

namespace {

void require_finite(const Eigen::VectorXd& v) {
  if (!v.allFinite()) {
    throw GeometryError(ErrorKind::NonFinite, "point coordinates must be finite");
  }
}

}  // namespace

Point::Point(Eigen::VectorXd coords) : coords_(std::move(coords)) {
  if (coords_.size() == 0) {
    throw GeometryError(ErrorKind::InvalidArgument, "point must have at least one coordinate");
  }
  require_finite(coords_);
}

Point::Point(std::initializer_list<double> coords)
    : Point(Eigen::Map<const Eigen::VectorXd>(coords.begin(),
                                              static_cast<Eigen::Index>(coords.size()))) {}

Point Point::origin(std::size_t dim) {
  return Point(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim)));
}

MetricTag MetricTag::lp(double p) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw GeometryError(ErrorKind::InvalidExponent,
                        "MetricTag::lp requires a finite p >= 1; use validate_p");
  }
  return MetricTag(Kind::Lp, p);
}

MetricTag validate_p(double p) {
  if (std::isnan(p)) {
    throw GeometryError(ErrorKind::InvalidExponent, "p is NaN");
  }
  if (std::isinf(p)) {
    if (p < 0) {
      throw GeometryError(ErrorKind::InvalidExponent, "p = -inf");
    }
    return MetricTag::linf();
  }
  if (std::abs(p - 1.0) <= 1e-12) {
    return MetricTag::lp(1.0);
  }
  if (p < 1.0) {
    // (|1-0|^p + |0-1|^p)^(1/p) = 2^(1/p); each leg to the origin has length 1.
    double direct = p > 0.0 ? std::pow(2.0, 1.0 / p) : std::numeric_limits<double>::infinity();
    throw InvalidExponentError(p, direct, 2.0);
  }
  return MetricTag::lp(p);
}

double norm(const MetricTag& m, const Eigen::Ref<const Eigen::VectorXd>& v) {
  const double largest = v.cwiseAbs().maxCoeff();
  if (m.is_linf() || largest == 0.0) {
    return largest;
  }
  const double p = m.p();
  if (p == 1.0) {
    return v.cwiseAbs().sum();
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double r = std::abs(v[i]) / largest;
    acc += p == 2.0 ? r * r : std::pow(r, p);
  }
  return largest * (p == 2.0 ? std::sqrt(acc) : std::pow(acc, 1.0 / p));
}

double norm(const MetricTag& m, const Point& v) { return norm(m, v.coords()); }

double distance(const MetricTag& m, const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw GeometryError(ErrorKind::DimensionMismatch,
                        "distance between points of dimension " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  }
  return norm(m, Eigen::VectorXd(a.coords() - b.coords()));
}

bool is_strictly_convex(const MetricTag& m) noexcept {
  return m.kind() == MetricTag::Kind::Lp && m.p() > 1.0;
}

}  // namespace isometry
