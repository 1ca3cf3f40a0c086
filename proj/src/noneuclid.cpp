#include "isometry/noneuclid.hpp"

#include "isometry/errors.hpp"

#include <Eigen/Geometry>
#include <Eigen/LU>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace isometry::noneuclid {

namespace {

constexpr std::size_t kGeodesicGrid = 256;

Eigen::Vector2d perp(const Eigen::Vector2d& v) { return {-v.y(), v.x()}; }

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

struct AxisAngle {
  Eigen::Vector3d axis;
  double angle;  // [0, pi]
};

// Axis and angle of a proper rotation. The skew part gives 2 sin(angle) axis;
// near a half turn the symmetric part (R + I) / 2 = axis axis^T takes over.
AxisAngle rotation_axis_angle(const Eigen::Matrix3d& r) {
  const Eigen::Vector3d w(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  const double s = 0.5 * w.norm();
  const double c = 0.5 * (r.trace() - 1.0);
  const double angle = std::atan2(s, c);
  Eigen::Vector3d axis;
  if (c > -0.5) {
    axis = s > 0.0 ? Eigen::Vector3d(w / (2.0 * s)) : Eigen::Vector3d::UnitZ();
  } else {
    // Symmetric part is c I + (1 - c) a a^T.
    const Eigen::Matrix3d sym =
        (0.5 * (r + r.transpose()) - c * Eigen::Matrix3d::Identity()) / (1.0 - c);
    Eigen::Index col = 0;
    sym.colwise().norm().maxCoeff(&col);
    axis = sym.col(col).normalized();
    if (axis.dot(w) < 0.0) {
      axis = -axis;
    }
  }
  return {axis, angle};
}

Eigen::Vector3d householder_apply(const Eigen::Vector3d& n, const Eigen::Vector3d& x) {
  return x - 2.0 * n.dot(x) * n;
}

Eigen::Vector2d reflect_raw(const Geodesic& g, const Eigen::Vector2d& x) {
  if (const auto* d = std::get_if<Diameter>(&g)) {
    return 2.0 * d->direction.dot(x) * d->direction - x;
  }
  const auto& arc = std::get<OrthoArc>(g);
  const Eigen::Vector2d rel = x - arc.center;
  const double len2 = rel.squaredNorm();
  if (!(len2 > 0.0)) {
    throw GeometryError(ErrorKind::InvalidArgument, "point coincides with the inversion center");
  }
  return arc.center + (arc.radius * arc.radius / len2) * rel;
}

double disk_distance_raw(const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
  const double denom = (1.0 - u.squaredNorm()) * (1.0 - v.squaredNorm());
  const double x = 2.0 * (u - v).squaredNorm() / denom;
  // acosh(1 + x) without the cancellation near x = 0.
  return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

// Geodesic of points hyperbolically equidistant from z and w.
Geodesic perpendicular_bisector(const Eigen::Vector2d& z, const Eigen::Vector2d& w) {
  const double alpha = 1.0 - z.squaredNorm();
  const double beta = 1.0 - w.squaredNorm();
  // beta |p - z|^2 = alpha |p - w|^2
  const double lead = beta - alpha;
  if (std::abs(lead) <= 1e-14) {
    return make_diameter(perp(z - w));
  }
  const Eigen::Vector2d center = (beta * z - alpha * w) / lead;
  const double constant = (beta * z.squaredNorm() - alpha * w.squaredNorm()) / lead;
  return make_arc(center, std::sqrt(center.squaredNorm() - constant));
}

// Point of the geodesic at parameter s in (0, 1); the endpoints are ideal.
// Diameters are parametrized by hyperbolic arc length over [-8, 8], arcs by
// the angle seen from their center.
Eigen::Vector2d point_on(const Geodesic& g, double s) {
  if (const auto* d = std::get_if<Diameter>(&g)) {
    const double tau = -8.0 + 16.0 * s;
    return std::tanh(0.5 * tau) * d->direction;
  }
  const auto& arc = std::get<OrthoArc>(g);
  const double toward_origin = std::atan2(-arc.center.y(), -arc.center.x());
  const double half_width = std::atan2(1.0, arc.radius);
  const double t = toward_origin + half_width * (2.0 * s - 1.0);
  return arc.center + arc.radius * Eigen::Vector2d(std::cos(t), std::sin(t));
}

Eigen::Vector2d apply_raw(std::span<const Geodesic> mirrors, Eigen::Vector2d x) {
  for (const auto& g : mirrors) {
    x = reflect_raw(g, x);
  }
  return x;
}

Geodesic common_perpendicular(const Geodesic& g1, const Geodesic& g2) {
  // A geodesic circle (C, R) is orthogonal to the arc (c, r) iff C . c = 1 and
  // to the diameter with normal n iff C . n = 0.
  auto row = [](const Geodesic& g) -> std::pair<Eigen::Vector2d, double> {
    if (const auto* d = std::get_if<Diameter>(&g)) {
      return {perp(d->direction), 0.0};
    }
    return {std::get<OrthoArc>(g).center, 1.0};
  };
  const auto [a1, b1] = row(g1);
  const auto [a2, b2] = row(g2);
  Eigen::Matrix2d lhs;
  lhs.row(0) = a1.transpose();
  lhs.row(1) = a2.transpose();
  if (std::abs(lhs.determinant()) <= 1e-12 * a1.norm() * a2.norm()) {
    // Both rows point the same way: the perpendicular is the diameter along them.
    return make_diameter(a1);
  }
  const Eigen::Vector2d center = lhs.inverse() * Eigen::Vector2d(b1, b2);
  return make_arc(center, std::sqrt(center.squaredNorm() - 1.0));
}

}  // namespace

SpherePoint::SpherePoint(const Eigen::Vector3d& v) : v_(v) {
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > 1e-9) {
    throw GeometryError(ErrorKind::NotOnSphere, "sphere point must be a unit vector");
  }
}

GreatCircle::GreatCircle(const Eigen::Vector3d& normal) : n_(normal) {
  if (!normal.allFinite() || std::abs(normal.norm() - 1.0) > 1e-12) {
    throw GeometryError(ErrorKind::NotUnitNormal, "great circle normal must be a unit vector");
  }
}

GreatCircle GreatCircle::from_unnormalized(const Eigen::Vector3d& normal) {
  const double len = normal.norm();
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw GeometryError(ErrorKind::NotUnitNormal, "great circle normal must be nonzero");
  }
  Eigen::Vector3d n = normal / len;
  n /= n.norm();
  return GreatCircle(n);
}

double sphere_distance(const SpherePoint& u, const SpherePoint& v) {
  // Same value as acos(clamp(u . v)) without its loss of accuracy near 0 and pi.
  return std::atan2(u.vec().cross(v.vec()).norm(), u.vec().dot(v.vec()));
}

SpherePoint sphere_reflect(const GreatCircle& g, const SpherePoint& x) {
  return SpherePoint(householder_apply(g.normal(), x.vec()));
}

Eigen::Matrix3d compose_sphere_mirrors(std::span<const GreatCircle> mirrors) {
  Eigen::Matrix3d q = Eigen::Matrix3d::Identity();
  for (const auto& g : mirrors) {
    const Eigen::Matrix3d h = Eigen::Matrix3d::Identity() - 2.0 * g.normal() * g.normal().transpose();
    q = h * q;
  }
  return q;
}

DiskPoint::DiskPoint(const Eigen::Vector2d& u) : u_(u) {
  if (!u.allFinite() || !(u.norm() < 1.0 - 1e-12)) {
    throw GeometryError(ErrorKind::OutsideDisk, "point must lie strictly inside the unit disk");
  }
}

Geodesic make_diameter(const Eigen::Vector2d& direction) {
  const double len = direction.norm();
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw GeometryError(ErrorKind::InvalidArgument, "diameter direction must be nonzero");
  }
  return Diameter{direction / len};
}

Geodesic make_arc(const Eigen::Vector2d& center, double radius) {
  if (!center.allFinite() || !(radius > 0.0) || !std::isfinite(radius)) {
    throw GeometryError(ErrorKind::InvalidArgument, "arc needs a finite center and positive radius");
  }
  const double c2 = center.squaredNorm();
  if (std::abs(c2 - radius * radius - 1.0) > 1e-9 * std::max(1.0, c2)) {
    throw GeometryError(ErrorKind::NotOrthogonalToBoundary,
                        "arc circle is not orthogonal to the unit circle");
  }
  return OrthoArc{center, radius};
}

bool same_geodesic(const Geodesic& a, const Geodesic& b, double tol) {
  if (a.index() != b.index()) {
    return false;
  }
  if (const auto* da = std::get_if<Diameter>(&a)) {
    return std::abs(cross2(da->direction, std::get<Diameter>(b).direction)) <= tol;
  }
  const auto& aa = std::get<OrthoArc>(a);
  const auto& ab = std::get<OrthoArc>(b);
  return (aa.center - ab.center).norm() <= tol && std::abs(aa.radius - ab.radius) <= tol;
}

double hyperbolic_distance(const DiskPoint& u, const DiskPoint& v) {
  return disk_distance_raw(u.vec(), v.vec());
}

Geodesic geodesic_through(const DiskPoint& u, const DiskPoint& v) {
  const Eigen::Vector2d& a = u.vec();
  const Eigen::Vector2d& b = v.vec();
  if ((a - b).norm() <= 1e-12) {
    throw GeometryError(ErrorKind::CoincidentPoints, "geodesic through coincident points");
  }
  if (std::abs(cross2(a, b)) <= 1e-9) {
    return make_diameter(a.squaredNorm() >= b.squaredNorm() ? a : b);
  }
  // |p - c|^2 = |c|^2 - 1 reduces to p . c = (|p|^2 + 1) / 2 for each point.
  Eigen::Matrix2d lhs;
  lhs.row(0) = a.transpose();
  lhs.row(1) = b.transpose();
  const Eigen::Vector2d rhs(0.5 * (a.squaredNorm() + 1.0), 0.5 * (b.squaredNorm() + 1.0));
  const Eigen::Vector2d center = lhs.inverse() * rhs;
  return make_arc(center, std::sqrt(center.squaredNorm() - 1.0));
}

DiskPoint hyp_reflect(const Geodesic& g, const DiskPoint& x) { return DiskPoint(reflect_raw(g, x.vec())); }

DiskPoint apply_hyperbolic_mirrors(std::span<const Geodesic> mirrors, const DiskPoint& x) {
  return DiskPoint(apply_raw(mirrors, x.vec()));
}

const char* type_name(const NonEuclidClass& cls) noexcept {
  static constexpr const char* names[] = {
      "sphere_reflection", "sphere_rotation", "sphere_glide_reflection", "hyp_rotation",
      "horolation",        "hyp_translation", "hyp_reflection",          "hyp_glide_reflection",
  };
  return names[cls.index()];
}

NonEuclidClass classify_sphere(std::span<const GreatCircle> mirrors, double tol) {
  if (mirrors.empty() || mirrors.size() > 3) {
    throw GeometryError(ErrorKind::InvalidArgument, "classify_sphere takes 1 to 3 mirrors");
  }
  const Eigen::Matrix3d q = compose_sphere_mirrors(mirrors);
  if (q.determinant() > 0.0) {
    const auto [axis, angle] = rotation_axis_angle(q);
    if (angle <= tol) {
      throw GeometryError(ErrorKind::IdenticalMirrors, "mirrors compose to the identity");
    }
    return SphereRotation{axis, angle};
  }
  // -q is a rotation by psi about a; q itself reflects across the plane normal
  // to a and rotates by pi - psi about -a.
  const auto [axis, psi] = rotation_axis_angle(-q);
  const double residual = std::numbers::pi - psi;
  if (residual <= tol) {
    return SphereReflection{axis};
  }
  return SphereGlideReflection{-axis, residual};
}

NonEuclidClass classify_hyperbolic_pair(const Geodesic& g1, const Geodesic& g2, double tol) {
  if (same_geodesic(g1, g2, tol)) {
    throw GeometryError(ErrorKind::IdenticalMirrors, "the two mirrors coincide");
  }
  const auto* d1 = std::get_if<Diameter>(&g1);
  const auto* d2 = std::get_if<Diameter>(&g2);
  if (d1 && d2) {
    return HypRotation{Eigen::Vector2d::Zero()};
  }

  // Inversive product: cosine of the crossing angle for meeting circles,
  // +-1 at tangency, beyond +-1 for disjoint circles.
  double inversive = 0.0;
  if (d1 || d2) {
    const auto& dia = d1 ? *d1 : *d2;
    const auto& arc = std::get<OrthoArc>(d1 ? g2 : g1);
    const Eigen::Vector2d n = perp(dia.direction);
    inversive = n.dot(arc.center) / arc.radius;
    const double gap = std::abs(inversive) - 1.0;
    if (gap < -tol) {
      // Points t * direction on the circle solve t^2 - 2 t (d . c) + 1 = 0;
      // the roots are reciprocal, take the one inside the disk.
      const double dc = dia.direction.dot(arc.center);
      const double root = std::sqrt(std::max(0.0, dc * dc - 1.0));
      const double t = 1.0 / (dc + std::copysign(root, dc));
      return HypRotation{t * dia.direction};
    }
    if (gap <= tol) {
      const Eigen::Vector2d foot = arc.center - n.dot(arc.center) * n;
      return Horolation{foot.normalized()};
    }
    return HypTranslation{common_perpendicular(g1, g2)};
  }

  const auto& a1 = std::get<OrthoArc>(g1);
  const auto& a2 = std::get<OrthoArc>(g2);
  const Eigen::Vector2d between = a2.center - a1.center;
  const double dist = between.norm();
  inversive = (a1.radius * a1.radius + a2.radius * a2.radius - dist * dist) /
              (2.0 * a1.radius * a2.radius);
  const double gap = std::abs(inversive) - 1.0;
  if (gap < -tol) {
    const Eigen::Vector2d e = between / dist;
    const double along = (a1.radius * a1.radius - a2.radius * a2.radius + dist * dist) / (2.0 * dist);
    const double h = std::sqrt(std::max(0.0, a1.radius * a1.radius - along * along));
    const Eigen::Vector2d p = a1.center + along * e + h * perp(e);
    const Eigen::Vector2d q = a1.center + along * e - h * perp(e);
    return HypRotation{p.squaredNorm() <= q.squaredNorm() ? p : q};
  }
  if (gap <= tol) {
    const Eigen::Vector2d e = between / dist;
    // External tangency (inversive -1) touches toward the other center;
    // internal tangency touches on the far side of the smaller circle.
    double sign = 1.0;
    if (inversive > 0.0 && a1.radius < a2.radius) {
      sign = -1.0;
    }
    const Eigen::Vector2d p = a1.center + sign * a1.radius * e;
    return Horolation{p.normalized()};
  }
  return HypTranslation{common_perpendicular(g1, g2)};
}

NonEuclidClass classify_hyperbolic(std::span<const Geodesic> mirrors, double tol) {
  if (mirrors.empty() || mirrors.size() > 3) {
    throw GeometryError(ErrorKind::InvalidArgument, "classify_hyperbolic takes 1 to 3 mirrors");
  }
  std::vector<Geodesic> reduced;
  for (const auto& g : mirrors) {
    if (!reduced.empty() && same_geodesic(reduced.back(), g, tol)) {
      reduced.pop_back();
    } else {
      reduced.push_back(g);
    }
  }
  switch (reduced.size()) {
    case 0:
      throw GeometryError(ErrorKind::IdenticalMirrors, "mirrors cancel to the identity");
    case 1:
      return HypReflection{reduced.front()};
    case 2:
      return classify_hyperbolic_pair(reduced[0], reduced[1], tol);
    default:
      break;
  }

  // An odd composition is a reflection iff it fixes a geodesic pointwise, and
  // that geodesic must then bisect any point and its image.
  const std::span<const Geodesic> seq(reduced);
  static constexpr std::array<std::array<double, 2>, 4> probes{
      {{0.1, 0.05}, {-0.3, 0.2}, {0.2, -0.4}, {0.0, 0.0}}};
  std::optional<Geodesic> candidate;
  for (const auto& pr : probes) {
    const Eigen::Vector2d z(pr[0], pr[1]);
    const Eigen::Vector2d fz = apply_raw(seq, z);
    if (disk_distance_raw(z, fz) > tol) {
      candidate = perpendicular_bisector(z, fz);
      break;
    }
  }
  if (!candidate) {
    throw GeometryError(ErrorKind::InvalidArgument, "composition fixes every probe point");
  }

  auto param = [](std::size_t i) {
    return (static_cast<double>(i) + 0.5) / static_cast<double>(kGeodesicGrid);
  };
  auto displacement = [&](double s) {
    const Eigen::Vector2d p = point_on(*candidate, s);
    return disk_distance_raw(p, apply_raw(seq, p));
  };
  std::size_t fixed = 0;
  std::size_t best = 0;
  double best_disp = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < kGeodesicGrid; ++i) {
    const double v = displacement(param(i));
    if (v <= tol) {
      ++fixed;
    }
    if (v < best_disp) {
      best_disp = v;
      best = i;
    }
  }
  if (fixed >= 2) {
    return HypReflection{*candidate};
  }

  // Golden-section refinement of the minimum between the neighbouring grid
  // parameters.
  double a = best == 0 ? 0.0 : param(best - 1);
  double b = best + 1 == kGeodesicGrid ? 1.0 : param(best + 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = displacement(c);
  double fd = displacement(d);
  for (int iter = 0; iter < 60; ++iter) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = displacement(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = displacement(d);
    }
  }
  const double refined = std::min({best_disp, fc, fd});
  if (refined <= tol) {
    // A single isolated fixed point cannot occur for an orientation-reversing
    // isometry other than a reflection; report what the sampling found.
    return HypReflection{*candidate};
  }
  return HypGlideReflection{refined};
}

}  // namespace isometry::noneuclid
