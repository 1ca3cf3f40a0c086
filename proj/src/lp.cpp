#include "isometry/lp.hpp"

#include "isometry/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace isometry::lp {

namespace {

constexpr std::array<OcticName, 8> kAllNames{
    OcticName::Identity,        OcticName::ReflectX, OcticName::ReflectY, OcticName::ReflectDiag,
    OcticName::ReflectAntiDiag, OcticName::Rot90,    OcticName::Rot180,   OcticName::Rot270,
};

Eigen::Matrix2d octic_matrix(OcticName name) {
  Eigen::Matrix2d m;
  switch (name) {
    case OcticName::Identity: m << 1, 0, 0, 1; break;
    case OcticName::ReflectX: m << 1, 0, 0, -1; break;
    case OcticName::ReflectY: m << -1, 0, 0, 1; break;
    case OcticName::ReflectDiag: m << 0, 1, 1, 0; break;
    case OcticName::ReflectAntiDiag: m << 0, -1, -1, 0; break;
    case OcticName::Rot90: m << 0, -1, 1, 0; break;
    case OcticName::Rot180: m << -1, 0, 0, -1; break;
    case OcticName::Rot270: m << 0, 1, -1, 0; break;
  }
  return m;
}

struct PairSample {
  Point x;
  Point y;
  double lambda;
};

std::vector<PairSample> draw_pairs(std::size_t n, std::uint64_t seed, SampleBox box) {
  if (n == 0) {
    throw GeometryError(ErrorKind::InvalidArgument, "n_samples must be at least 1");
  }
  if (!(box.lo < box.hi)) {
    throw GeometryError(ErrorKind::InvalidArgument, "sample box must have lo < hi");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(box.lo, box.hi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<PairSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x0 = coord(rng);
    const double x1 = coord(rng);
    const double y0 = coord(rng);
    const double y1 = coord(rng);
    const double l = unit(rng);
    out.push_back({Point{x0, x1}, Point{y0, y1}, l});
  }
  return out;
}

// Max-violation reduction; strict comparison keeps the lowest index on ties.
template <typename Violation>
VerificationReport reduce(const std::vector<PairSample>& samples, double tol, bool record_lambda,
                          Violation violation) {
  double worst = -1.0;
  std::size_t worst_index = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double v = violation(samples[i]);
    if (std::isnan(v)) {
      worst = std::numeric_limits<double>::infinity();
      worst_index = i;
      break;
    }
    if (v > worst) {
      worst = v;
      worst_index = i;
    }
  }
  VerificationReport report{worst <= tol, samples.size(), worst, std::nullopt};
  if (!report.verdict) {
    const auto& s = samples[worst_index];
    report.witness = Witness{s.x, s.y, worst,
                             record_lambda ? std::optional<double>(s.lambda) : std::nullopt};
  }
  return report;
}

PointMap as_point_map(const AffineMap& f) {
  return [f](const Point& p) { return apply(f, p); };
}

}  // namespace

const char* to_string(OcticName name) noexcept {
  switch (name) {
    case OcticName::Identity: return "identity";
    case OcticName::ReflectX: return "reflect_x";
    case OcticName::ReflectY: return "reflect_y";
    case OcticName::ReflectDiag: return "reflect_diag";
    case OcticName::ReflectAntiDiag: return "reflect_antidiag";
    case OcticName::Rot90: return "rot_90";
    case OcticName::Rot180: return "rot_180";
    case OcticName::Rot270: return "rot_270";
  }
  return "unknown";
}

OcticElement octic_element(OcticName name) {
  return {name, AffineMap::linear(Eigen::MatrixXd(octic_matrix(name)))};
}

std::vector<OcticElement> octic_group() {
  std::vector<OcticElement> out;
  out.reserve(kAllNames.size());
  for (OcticName n : kAllNames) {
    out.push_back(octic_element(n));
  }
  return out;
}

std::optional<OcticName> octic_name_of(const Eigen::Matrix2d& m, double tol) {
  for (OcticName n : kAllNames) {
    if ((m - octic_matrix(n)).cwiseAbs().maxCoeff() <= tol) {
      return n;
    }
  }
  return std::nullopt;
}

TranslationSplit split_translation(const AffineMap& f) {
  return {f.translation(), AffineMap::linear(f.matrix())};
}

double isometry_violation(const PointMap& f, const MetricTag& m, const Point& x, const Point& y) {
  return std::abs(distance(m, x, y) - distance(m, f(x), f(y)));
}

VerificationReport verify_isometry(const PointMap& f, const MetricTag& m, std::size_t n_samples,
                                   std::uint64_t seed, double tol, SampleBox box) {
  const auto samples = draw_pairs(n_samples, seed, box);
  return reduce(samples, tol, false,
                [&](const PairSample& s) { return isometry_violation(f, m, s.x, s.y); });
}

VerificationReport verify_isometry(const AffineMap& f, const MetricTag& m, std::size_t n_samples,
                                   std::uint64_t seed, double tol, SampleBox box) {
  if (f.dim() != 2) {
    throw GeometryError(ErrorKind::UnsupportedDimension, "verification samples the plane");
  }
  return verify_isometry(as_point_map(f), m, n_samples, seed, tol, box);
}

std::optional<OcticElement> classify_origin_fixing(const Eigen::Matrix2d& m, const MetricTag& metric,
                                                   double tol) {
  if (metric.is_lp(2.0)) {
    throw GeometryError(ErrorKind::InvalidArgument,
                        "the eight-element classification excludes p = 2");
  }
  if (const auto name = octic_name_of(m, tol)) {
    return octic_element(*name);
  }
  return std::nullopt;
}

double corner_cycle_sum(std::span<const Eigen::Vector2d, 4> pts) {
  for (const auto& p : pts) {
    if (!p.allFinite() || std::abs(p.cwiseAbs().sum() - 1.0) > 1e-9) {
      throw GeometryError(ErrorKind::NotOnUnitCircle, "point is not on the taxicab unit circle");
    }
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double winding = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % 4];
    double gap = std::atan2(b.y(), b.x()) - std::atan2(a.y(), a.x());
    if (gap < 0.0) {
      gap += two_pi;
    }
    if (!(gap > 0.0)) {
      throw GeometryError(ErrorKind::NotCounterclockwise, "repeated point in the cycle");
    }
    winding += gap;
  }
  if (std::abs(winding - two_pi) > 1e-9) {
    throw GeometryError(ErrorKind::NotCounterclockwise,
                        "points do not wind once counterclockwise around the origin");
  }

  double total = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    total += (pts[(i + 1) % 4] - pts[i]).cwiseAbs().sum();
  }
  Eigen::Vector2d lo = pts[0];
  Eigen::Vector2d hi = pts[0];
  for (const auto& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double perimeter = 2.0 * (hi - lo).sum();
  if (std::abs(total - perimeter) > 1e-12 || total > 8.0 + 1e-12) {
    throw std::logic_error("corner cycle sum disagrees with the bounding-box perimeter");
  }
  return total;
}

VerificationReport check_midpoint_affinity(const PointMap& f, const MetricTag& m,
                                           std::size_t n_samples, std::uint64_t seed, double tol,
                                           SampleBox box) {
  const auto samples = draw_pairs(n_samples, seed, box);
  return reduce(samples, tol, true, [&](const PairSample& s) {
    const double l = s.lambda;
    const Point mid(((1.0 - l) * s.x.coords() + l * s.y.coords()).eval());
    const Eigen::VectorXd blended = (1.0 - l) * f(s.x).coords() + l * f(s.y).coords();
    return norm(m, Eigen::VectorXd(f(mid).coords() - blended));
  });
}

VerificationReport check_midpoint_affinity(const AffineMap& f, const MetricTag& m,
                                           std::size_t n_samples, std::uint64_t seed, double tol,
                                           SampleBox box) {
  if (f.dim() != 2) {
    throw GeometryError(ErrorKind::UnsupportedDimension, "affinity check samples the plane");
  }
  return check_midpoint_affinity(as_point_map(f), m, n_samples, seed, tol, box);
}

BallProbe ball_intersection_probe(const Point& x, const Point& y, double lambda, const MetricTag& m,
                                  std::size_t n_samples, std::uint64_t seed) {
  if (x.dim() != 2 || y.dim() != 2) {
    throw GeometryError(ErrorKind::UnsupportedDimension, "ball probe sweeps planar spheres");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw GeometryError(ErrorKind::InvalidArgument, "lambda must lie in [0, 1]");
  }
  if (n_samples == 0) {
    throw GeometryError(ErrorKind::InvalidArgument, "n_samples must be at least 1");
  }
  const Eigen::Vector2d xv = x.coords();
  const Eigen::Vector2d yv = y.coords();
  if ((yv - xv).norm() <= 1e-12) {
    throw GeometryError(ErrorKind::CoincidentPoints, "ball probe needs distinct centers");
  }
  const double d = distance(m, x, y);
  const double r_x = lambda * d;
  const double r_y = (1.0 - lambda) * d;
  const Point witness(((1.0 - lambda) * x.coords() + lambda * y.coords()).eval());
  const double slack = 1e-9 * (1.0 + d);
  if (distance(m, witness, x) > r_x + slack || distance(m, witness, y) > r_y + slack) {
    throw std::logic_error("ball probe witness escaped one of the balls");
  }

  std::mt19937_64 rng(seed);
  const double phase = std::uniform_real_distribution<double>(0.25, 0.75)(rng);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n_samples);
  const double base = std::atan2(yv.y() - xv.y(), yv.x() - xv.x());

  std::size_t extras = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double t = base + (static_cast<double>(i) + phase) * step;
    const Eigen::Vector2d u(std::cos(t), std::sin(t));
    const Eigen::Vector2d z = xv + r_x * u / norm(m, Eigen::VectorXd(u));
    if ((z - witness.coords()).norm() <= 1e-6) {
      continue;
    }
    if (norm(m, Eigen::VectorXd(z - yv)) <= r_y + 1e-9) {
      ++extras;
    }
  }
  return {witness, extras, n_samples};
}

}  // namespace isometry::lp
