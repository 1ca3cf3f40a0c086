#include "isometry/euclid.hpp"

#include "isometry/errors.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace isometry::euclid {

namespace {

double coordinate_scale(std::span<const Point> pts) {
  double s = 0.0;
  for (const auto& p : pts) {
    s = std::max(s, p.coords().cwiseAbs().maxCoeff());
  }
  return s;
}

double euclidean(const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return (a - b).norm(); }

// Normalized Gram determinant of the edge vectors from the first vertex:
// det(E^T E) / prod ||e_i||^2, which is 1 for an orthogonal simplex and 0 for
// a flat one.
double simplex_fatness(std::span<const Point> pts) {
  const auto n = static_cast<Eigen::Index>(pts.size()) - 1;
  const auto dim = static_cast<Eigen::Index>(pts.front().dim());
  Eigen::MatrixXd edges(dim, n);
  double denom = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    edges.col(i) = pts[static_cast<std::size_t>(i) + 1].coords() - pts.front().coords();
    denom *= edges.col(i).squaredNorm();
  }
  if (denom == 0.0) {
    return 0.0;
  }
  return (edges.transpose() * edges).determinant() / denom;
}

Eigen::Vector2d perp(const Eigen::Vector2d& v) { return {-v.y(), v.x()}; }

double cross2(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return a[0] * b[1] - a[1] * b[0];
}

void require_planar(std::size_t dim) {
  if (dim != 2) {
    throw GeometryError(ErrorKind::UnsupportedDimension,
                        "planar operation called with dimension " + std::to_string(dim));
  }
}

std::vector<Hyperplane> sweep(const Correspondence& c) {
  const auto& targets = c.targets();
  std::vector<Point> current = c.sources();
  const double scale = std::max(coordinate_scale(current), coordinate_scale(targets));
  const double matched_tol = 1e-9 * (1.0 + scale);

  std::vector<Hyperplane> mirrors;
  for (std::size_t i = 0; i < current.size(); ++i) {
    if (euclidean(current[i].coords(), targets[i].coords()) <= matched_tol) {
      continue;
    }
    Hyperplane mirror = perpendicular_bisector(current[i], targets[i]);
    for (auto& p : current) {
      p = reflect(mirror, p);
    }
    mirrors.push_back(std::move(mirror));
  }
  return mirrors;
}

}  // namespace

Correspondence::Correspondence(std::vector<Point> sources, std::vector<Point> targets)
    : sources_(std::move(sources)), targets_(std::move(targets)) {
  if (sources_.empty()) {
    throw GeometryError(ErrorKind::InvalidArgument, "correspondence needs reference points");
  }
  const std::size_t n = sources_.front().dim();
  if (sources_.size() != n + 1 || targets_.size() != n + 1) {
    throw GeometryError(ErrorKind::InvalidArgument,
                        "correspondence in dimension " + std::to_string(n) + " needs " +
                            std::to_string(n + 1) + " source and target points");
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (sources_[i].dim() != n || targets_[i].dim() != n) {
      throw GeometryError(ErrorKind::DimensionMismatch, "correspondence points differ in dimension");
    }
  }
  if (!(simplex_fatness(sources_) > 1e-9)) {
    throw GeometryError(n == 2 ? ErrorKind::CollinearAnchors : ErrorKind::DegenerateSimplex,
                        "source points are not affinely independent");
  }
  const double tol = 1e-9 * (1.0 + std::max(coordinate_scale(sources_), coordinate_scale(targets_)));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const double ds = euclidean(sources_[i].coords(), sources_[j].coords());
      const double dt = euclidean(targets_[i].coords(), targets_[j].coords());
      if (std::abs(ds - dt) > tol) {
        throw GeometryError(ErrorKind::NonCongruent,
                            "distance between reference points " + std::to_string(i) + " and " +
                                std::to_string(j) + " is not preserved");
      }
    }
  }
}

Correspondence Correspondence::from_map(const AffineMap& f) {
  const std::size_t n = f.dim();
  std::vector<Point> sources;
  sources.reserve(n + 1);
  sources.push_back(Point::origin(n));
  for (std::size_t i = 0; i < n; ++i) {
    sources.emplace_back(Eigen::VectorXd::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(i)));
  }
  std::vector<Point> targets;
  targets.reserve(n + 1);
  for (const auto& s : sources) {
    targets.push_back(apply(f, s));
  }
  return Correspondence(std::move(sources), std::move(targets));
}

Point locate_by_distances(std::span<const Point, 3> anchors, std::span<const double, 3> dists,
                          double tol) {
  for (const auto& a : anchors) {
    require_planar(a.dim());
  }
  for (double d : dists) {
    if (!(d >= 0.0) || !std::isfinite(d)) {
      throw GeometryError(ErrorKind::InvalidArgument, "distances must be finite and nonnegative");
    }
  }
  if (!(simplex_fatness(anchors) > 1e-9)) {
    throw GeometryError(ErrorKind::CollinearAnchors, "anchors are collinear");
  }

  const Eigen::Vector2d a = anchors[0].coords();
  const Eigen::Vector2d b = anchors[1].coords();
  const Eigen::Vector2d c = anchors[2].coords();
  const double base = (b - a).norm();
  const Eigen::Vector2d ex = (b - a) / base;
  const Eigen::Vector2d ey = perp(ex);

  // Circle about a (radius dists[0]) meets circle about b (radius dists[1]).
  const double along = (dists[0] * dists[0] - dists[1] * dists[1] + base * base) / (2.0 * base);
  const double height = std::sqrt(std::max(0.0, dists[0] * dists[0] - along * along));
  const Eigen::Vector2d upper = a + along * ex + height * ey;
  const Eigen::Vector2d lower = a + along * ex - height * ey;
  Eigen::Vector2d p = std::abs((upper - c).norm() - dists[2]) <= std::abs((lower - c).norm() - dists[2])
                          ? upper
                          : lower;

  // Gauss-Newton polish on all three residuals; the circle intersection loses
  // half the digits when p sits close to the line through a and b.
  const std::array<Eigen::Vector2d, 3> centers{a, b, c};
  for (int iter = 0; iter < 3; ++iter) {
    Eigen::Matrix<double, 3, 2> jac;
    Eigen::Vector3d res;
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      const Eigen::Vector2d diff = p - centers[static_cast<std::size_t>(i)];
      const double len = diff.norm();
      if (len == 0.0) {
        ok = false;
        break;
      }
      jac.row(i) = diff.transpose() / len;
      res[i] = len - dists[static_cast<std::size_t>(i)];
    }
    if (!ok) {
      break;
    }
    const Eigen::Matrix2d normal_eq = jac.transpose() * jac;
    if (std::abs(normal_eq.determinant()) < 1e-300) {
      break;
    }
    p -= normal_eq.inverse() * (jac.transpose() * res);
  }

  double scale = coordinate_scale(anchors);
  for (double d : dists) {
    scale = std::max(scale, d);
  }
  const double accept = tol * (1.0 + scale);
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs((p - centers[i]).norm() - dists[i]) > accept) {
      throw GeometryError(ErrorKind::InconsistentDistances,
                          "no point realizes the requested distances");
    }
  }
  return Point(Eigen::VectorXd(p));
}

std::vector<Hyperplane> decompose(const Correspondence& c) {
  require_planar(c.dim());
  return sweep(c);
}

std::vector<Hyperplane> decompose_nd(const Correspondence& c) { return sweep(c); }

AffineMap compose_mirrors(std::span<const Hyperplane> mirrors, std::size_t dim) {
  AffineMap acc = AffineMap::identity(dim);
  for (const auto& m : mirrors) {
    if (m.dim() != dim) {
      throw GeometryError(ErrorKind::DimensionMismatch, "mirror dimension differs");
    }
    acc = compose(reflection_as_affine(m), acc);
  }
  return acc;
}

IsometryClass classify(const AffineMap& f, double tol) {
  require_planar(f.dim());
  const Eigen::Matrix2d m = f.matrix();
  const Eigen::Vector2d b = f.translation();
  if (orthogonality_defect(f.matrix()) > tol) {
    throw GeometryError(ErrorKind::NotAnIsometry, "matrix is not orthogonal");
  }

  if (m.determinant() > 0.0) {
    double angle = std::atan2(m(1, 0), m(0, 0));
    if (std::abs(angle) <= tol) {
      if (b.norm() <= tol) {
        return Identity{};
      }
      return Translation{b};
    }
    if (std::abs(angle + std::numbers::pi) <= tol) {
      angle = std::numbers::pi;
    }
    const Eigen::Vector2d center = (Eigen::Matrix2d::Identity() - m).inverse() * b;
    return Rotation{center, angle};
  }

  // M - I has rank one; the axis direction is orthogonal to its larger row.
  const Eigen::Matrix2d k = m - Eigen::Matrix2d::Identity();
  const Eigen::Vector2d row = k.row(0).norm() >= k.row(1).norm() ? Eigen::Vector2d(k.row(0))
                                                                  : Eigen::Vector2d(k.row(1));
  const Eigen::Vector2d dir = perp(row).normalized();
  const Eigen::Vector2d glide = dir.dot(b) * dir;
  const Eigen::Vector2d normal = perp(dir);
  Hyperplane axis(Eigen::VectorXd(normal), normal.dot(0.5 * b));
  if (glide.norm() <= tol) {
    return Reflection{std::move(axis)};
  }
  return GlideReflection{std::move(axis), glide};
}

SequenceClassification classify_reflection_sequence(std::span<const Hyperplane> mirrors, double tol) {
  if (mirrors.size() > 3) {
    throw GeometryError(ErrorKind::InvalidArgument, "at most three mirrors");
  }
  for (const auto& m : mirrors) {
    require_planar(m.dim());
  }
  auto parallel = [tol](const Hyperplane& g, const Hyperplane& h) {
    return std::abs(cross2(g.normal(), h.normal())) <= tol;
  };

  MirrorPattern pattern = MirrorPattern::Empty;
  switch (mirrors.size()) {
    case 0:
      break;
    case 1:
      pattern = MirrorPattern::Single;
      break;
    case 2:
      if (mirrors[0].same_as(mirrors[1], tol)) {
        pattern = MirrorPattern::CoincidentPair;
      } else if (parallel(mirrors[0], mirrors[1])) {
        pattern = MirrorPattern::ParallelPair;
      } else {
        pattern = MirrorPattern::IntersectingPair;
      }
      break;
    default: {
      const bool p01 = parallel(mirrors[0], mirrors[1]);
      const bool p12 = parallel(mirrors[1], mirrors[2]);
      if (p01 && p12) {
        pattern = MirrorPattern::ParallelTriple;
        break;
      }
      // Meet two non-parallel mirrors, then test the third for incidence.
      const std::size_t i = p01 ? 1 : 0;
      const std::size_t j = p01 ? 2 : 1;
      const std::size_t other = 3 - i - j;
      Eigen::Matrix2d lines;
      lines.row(0) = mirrors[i].normal().transpose();
      lines.row(1) = mirrors[j].normal().transpose();
      const Eigen::Vector2d meet =
          lines.inverse() * Eigen::Vector2d(mirrors[i].offset(), mirrors[j].offset());
      pattern = std::abs(mirrors[other].signed_distance(meet)) <= tol * (1.0 + meet.norm())
                    ? MirrorPattern::ConcurrentTriple
                    : MirrorPattern::GeneralTriple;
      break;
    }
  }
  return {classify(compose_mirrors(mirrors, 2), tol), pattern};
}

Parity parity(const AffineMap& f, double tol) {
  if (orthogonality_defect(f.matrix()) > tol) {
    throw GeometryError(ErrorKind::NotAnIsometry, "matrix is not orthogonal");
  }
  return f.matrix().determinant() > 0.0 ? Parity::Direct : Parity::Indirect;
}

AffineMap synthesize(const IsometryClass& cls) {
  struct Visitor {
    AffineMap operator()(const Identity&) const { return AffineMap::identity(2); }
    AffineMap operator()(const Translation& t) const {
      return AffineMap::translation(Eigen::VectorXd(t.vector));
    }
    AffineMap operator()(const Rotation& r) const { return AffineMap::rotation(r.angle, r.center); }
    AffineMap operator()(const Reflection& r) const { return reflection_as_affine(r.axis); }
    AffineMap operator()(const GlideReflection& g) const {
      return compose(AffineMap::translation(Eigen::VectorXd(g.glide)), reflection_as_affine(g.axis));
    }
  };
  return std::visit(Visitor{}, cls);
}

const char* to_string(MirrorPattern pattern) noexcept {
  switch (pattern) {
    case MirrorPattern::Empty: return "empty";
    case MirrorPattern::Single: return "single";
    case MirrorPattern::CoincidentPair: return "coincident_pair";
    case MirrorPattern::ParallelPair: return "parallel_pair";
    case MirrorPattern::IntersectingPair: return "intersecting_pair";
    case MirrorPattern::ParallelTriple: return "parallel_triple";
    case MirrorPattern::ConcurrentTriple: return "concurrent_triple";
    case MirrorPattern::GeneralTriple: return "general_triple";
  }
  return "unknown";
}

const char* type_name(const IsometryClass& cls) noexcept {
  static constexpr const char* names[] = {"identity", "translation", "rotation", "reflection",
                                          "glide_reflection"};
  return names[cls.index()];
}

}  // namespace isometry::euclid
