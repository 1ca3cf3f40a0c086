#include "isometry/errors.hpp"
#include "isometry/lp.hpp"
#include "oracles.hpp"

#include <Eigen/LU>
#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

using namespace isometry;
using namespace isometry::lp;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXd vec(std::initializer_list<double> v) {
  return Eigen::Map<const Eigen::VectorXd>(v.begin(), static_cast<Eigen::Index>(v.size()));
}

Eigen::Matrix2d mat(double a, double b, double c, double d) { return (Eigen::Matrix2d() << a, b, c, d).finished(); }

AffineMap linear(const Eigen::Matrix2d& m) { return AffineMap::linear(Eigen::MatrixXd(m)); }

std::vector<MetricTag> non_euclidean_metrics() {
  return {MetricTag::lp(1), MetricTag::lp(1.5), MetricTag::lp(3), MetricTag::lp(7), MetricTag::linf()};
}

OcticName name_of_product(OcticName a, OcticName b) {
  const Eigen::Matrix2d m = compose(octic_element(a).map, octic_element(b).map).matrix();
  const auto n = octic_name_of(m);
  EXPECT_TRUE(n.has_value());
  return *n;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no GeometryError thrown";
  return ErrorKind::InvalidArgument;
}

// A point on the taxicab unit circle at polar angle t.
Eigen::Vector2d diamond(double t) {
  const Eigen::Vector2d u(std::cos(t), std::sin(t));
  return u / (std::fabs(u.x()) + std::fabs(u.y()));
}

}  // namespace

TEST(SplitTranslation, Examples) {
  const auto a = split_translation(AffineMap::translation(vec({3, -1})));
  EXPECT_EQ(a.translation, vec({3, -1}));
  EXPECT_EQ(a.fixer.matrix(), Eigen::MatrixXd::Identity(2, 2));
  EXPECT_EQ(a.fixer.translation(), vec({0, 0}));

  const auto b = split_translation(AffineMap(octic_element(OcticName::Rot90).map.matrix(), vec({1, 2})));
  EXPECT_EQ(b.translation, vec({1, 2}));
  EXPECT_EQ(octic_name_of(b.fixer.matrix()), OcticName::Rot90);

  const auto c = split_translation(AffineMap::identity(2));
  EXPECT_EQ(c.translation, vec({0, 0}));
}

TEST(SplitTranslation, RecompositionReproducesMap) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 500; ++i) {
    const AffineMap f(Eigen::MatrixXd(mat(u(rng), u(rng), u(rng), u(rng)) + 25 * Eigen::Matrix2d::Identity()),
                      vec({u(rng), u(rng)}));
    const auto s = split_translation(f);
    EXPECT_EQ(apply(s.fixer, Point::origin(2)).coords(), vec({0, 0}));
    const auto g = compose(AffineMap::translation(s.translation), s.fixer);
    const Point x{u(rng), u(rng)};
    EXPECT_LT((apply(g, x).coords() - apply(f, x).coords()).cwiseAbs().maxCoeff(), 1e-12 * 400);
  }
}

TEST(OcticGroup, Examples) {
  const auto g = octic_group();
  ASSERT_EQ(g.size(), 8u);
  EXPECT_EQ(name_of_product(OcticName::Rot90, OcticName::Rot90), OcticName::Rot180);
  EXPECT_EQ(name_of_product(OcticName::ReflectX, OcticName::ReflectY), OcticName::Rot180);
  for (const auto& e : g) {
    EXPECT_EQ(e.map.translation(), vec({0, 0}));
    for (int r = 0; r < 2; ++r) {
      int nz_row = 0;
      int nz_col = 0;
      for (int c = 0; c < 2; ++c) {
        const double v = e.map.matrix()(r, c);
        EXPECT_TRUE(v == 0 || v == 1 || v == -1);
        nz_row += v != 0;
        nz_col += e.map.matrix()(c, r) != 0;
      }
      EXPECT_EQ(nz_row, 1);
      EXPECT_EQ(nz_col, 1);
    }
  }
  EXPECT_EQ(octic_element(OcticName::ReflectX).map.matrix(), Eigen::MatrixXd(mat(1, 0, 0, -1)));
  EXPECT_EQ(octic_element(OcticName::ReflectDiag).map.matrix(), Eigen::MatrixXd(mat(0, 1, 1, 0)));
  EXPECT_EQ(octic_element(OcticName::ReflectAntiDiag).map.matrix(), Eigen::MatrixXd(mat(0, -1, -1, 0)));
  EXPECT_EQ(octic_element(OcticName::Rot90).map.matrix(), Eigen::MatrixXd(mat(0, -1, 1, 0)));
  EXPECT_STREQ(to_string(OcticName::ReflectAntiDiag), "reflect_antidiag");
}

TEST(OcticGroup, AxiomsAndDihedralTable) {
  const auto g = octic_group();
  std::vector<OcticName> names;
  for (const auto& e : g) names.push_back(e.name);
  // Closure and inverses.
  for (auto a : names) {
    int inverses = 0;
    for (auto b : names) {
      const auto ab = name_of_product(a, b);
      EXPECT_NE(std::find(names.begin(), names.end(), ab), names.end());
      inverses += ab == OcticName::Identity;
    }
    EXPECT_EQ(inverses, 1);
    EXPECT_EQ(name_of_product(OcticName::Identity, a), a);
    EXPECT_EQ(name_of_product(a, OcticName::Identity), a);
  }
  // Presentation <r, s | r^4 = s^2 = 1, s r s = r^-1>.
  const auto r = OcticName::Rot90;
  EXPECT_EQ(name_of_product(r, name_of_product(r, name_of_product(r, r))), OcticName::Identity);
  EXPECT_NE(name_of_product(r, r), OcticName::Identity);
  for (auto s : {OcticName::ReflectX, OcticName::ReflectY, OcticName::ReflectDiag, OcticName::ReflectAntiDiag}) {
    EXPECT_EQ(name_of_product(s, s), OcticName::Identity);
    EXPECT_EQ(name_of_product(s, name_of_product(r, s)), OcticName::Rot270);
  }
  // Each element is r^k or r^k s for exactly one (k, e): 8 distinct words.
  std::vector<OcticName> words;
  OcticName rk = OcticName::Identity;
  for (int k = 0; k < 4; ++k) {
    words.push_back(rk);
    words.push_back(name_of_product(rk, OcticName::ReflectX));
    rk = name_of_product(r, rk);
  }
  std::sort(words.begin(), words.end());
  EXPECT_EQ(std::unique(words.begin(), words.end()), words.end());
  EXPECT_NE(name_of_product(r, OcticName::ReflectX), name_of_product(OcticName::ReflectX, r));
}

TEST(OcticGroup, PreservesTaxicabExactlyOnRationals) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> num(-640, 640);
  for (const auto& e : octic_group()) {
    for (int i = 0; i < 500; ++i) {
      const Point x{num(rng) / 64.0, num(rng) / 64.0};
      const Point y{num(rng) / 64.0, num(rng) / 64.0};
      EXPECT_EQ(distance(MetricTag::lp(1), x, y), distance(MetricTag::lp(1), apply(e.map, x), apply(e.map, y)));
    }
  }
}

TEST(VerifyIsometry, Examples) {
  const auto rot90 = octic_element(OcticName::Rot90).map;
  EXPECT_TRUE(verify_isometry(rot90, MetricTag::lp(3), 1000, 1).verdict);

  const auto quarter_turn = AffineMap::rotation(kPi / 4);
  const auto report = verify_isometry(quarter_turn, MetricTag::lp(3), 1000, 1);
  EXPECT_FALSE(report.verdict);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_GT(report.witness->violation, kDefaultTolerance);
  EXPECT_EQ(report.witness->violation, report.max_violation);
  EXPECT_EQ(report.samples_tested, 1000u);

  const PointMap f = [&](const Point& p) { return apply(quarter_turn, p); };
  EXPECT_NEAR(isometry_violation(f, MetricTag::lp(3), Point{0, 0}, Point{1, 0}),
              1.0 - 0.890898718140339304740226205591, 1e-15);

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int i = 0; i < 50; ++i) {
    auto g = AffineMap::rotation(ang(rng), vec({1.5, -2}));
    EXPECT_TRUE(verify_isometry(g, MetricTag::lp(2), 500, i).verdict);
  }
  EXPECT_EQ(kind_of([&] { verify_isometry(rot90, MetricTag::lp(3), 0, 1); }), ErrorKind::InvalidArgument);
}

TEST(VerifyIsometry, DeterministicAndWitnessReproducible) {
  const auto g = AffineMap::rotation(0.3);
  const auto a = verify_isometry(g, MetricTag::lp(1), 300, 42);
  const auto b = verify_isometry(g, MetricTag::lp(1), 300, 42);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(a.max_violation, b.max_violation);
  EXPECT_EQ(a.witness->first, b.witness->first);
  EXPECT_EQ(a.witness->second, b.witness->second);
  const PointMap f = [&](const Point& p) { return apply(g, p); };
  EXPECT_EQ(isometry_violation(f, MetricTag::lp(1), a.witness->first, a.witness->second), a.max_violation);
  const auto c = verify_isometry(g, MetricTag::lp(1), 300, 43);
  EXPECT_NE(a.witness->first, c.witness->first);
  for (const auto& e : {a.witness->first, a.witness->second}) {
    EXPECT_LE(std::fabs(e[0]), 10.0);
    EXPECT_LE(std::fabs(e[1]), 10.0);
  }
}

TEST(VerifyIsometry, TieBreakKeepsLowestIndex) {
  // Samples come from a box so small that d(x, y) vanishes next to 1, so every
  // pair split by the threshold ties at violation exactly 1.
  const PointMap f = [](const Point& p) { return p[0] < 0.5e-300 ? Point{0, 0} : Point{1, 0}; };
  const SampleBox tiny{0.0, 1e-300};
  const auto full = verify_isometry(f, MetricTag::lp(1), 200, 3, 1e-9, tiny);
  ASSERT_TRUE(full.witness);
  EXPECT_EQ(full.max_violation, 1.0);
  // The shortest prefix that already fails holds the lowest tied index.
  for (std::size_t n = 1; n <= 200; ++n) {
    const auto prefix = verify_isometry(f, MetricTag::lp(1), n, 3, 1e-9, tiny);
    if (!prefix.verdict) {
      EXPECT_EQ(prefix.witness->first, full.witness->first);
      EXPECT_EQ(prefix.witness->second, full.witness->second);
      break;
    }
  }
}

TEST(VerifyIsometry, EightElementsPassAcrossMetrics) {
  for (const auto& m : non_euclidean_metrics()) {
    for (const auto& e : octic_group()) {
      const auto r = verify_isometry(e.map, m, 1000, 11, 1e-12);
      EXPECT_TRUE(r.verdict) << to_string(e.name) << " " << r.max_violation;
    }
  }
}

TEST(VerifyIsometry, NonCandidatesFailAcrossMetrics) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_real_distribution<double> u(-2, 2);
  int rotations = 0;
  while (rotations < 200) {
    const double t = ang(rng);
    const double to_quarter = std::fabs(std::remainder(t, kPi / 2));
    if (to_quarter < 1e-3) continue;
    ++rotations;
    for (const auto& m : non_euclidean_metrics()) {
      EXPECT_FALSE(verify_isometry(AffineMap::rotation(t), m, 1000, rotations).verdict) << t;
    }
  }
  int shears = 0;
  while (shears < 200) {
    const Eigen::Matrix2d a = mat(u(rng), u(rng), u(rng), u(rng));
    if (std::fabs(a.determinant()) < 1e-3) continue;
    double gap = 1e300;
    for (const auto& e : octic_group()) gap = std::min(gap, (a - e.map.matrix()).cwiseAbs().maxCoeff());
    if (gap < 1e-3) continue;
    ++shears;
    for (const auto& m : non_euclidean_metrics()) {
      EXPECT_FALSE(verify_isometry(linear(a), m, 1000, shears).verdict);
    }
  }
}

TEST(ClassifyOriginFixing, Examples) {
  const auto a = classify_origin_fixing(mat(0, -1, 1, 0), MetricTag::lp(3));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->name, OcticName::Rot90);
  const auto b = classify_origin_fixing(Eigen::Matrix2d::Identity(), MetricTag::lp(1));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->name, OcticName::Identity);
  EXPECT_FALSE(classify_origin_fixing(mat(0.9, -0.1, 0.1, 0.9), MetricTag::linf()));
  EXPECT_EQ(kind_of([] { classify_origin_fixing(Eigen::Matrix2d::Identity(), MetricTag::lp(2)); }),
            ErrorKind::InvalidArgument);
  const auto c = classify_origin_fixing(mat(1e-12, 1, 1, -1e-12), MetricTag::lp(4));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->name, OcticName::ReflectDiag);
}

TEST(CornerCycleSum, Examples) {
  const std::array<Eigen::Vector2d, 4> corners{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  EXPECT_EQ(corner_cycle_sum(corners), 8.0);
  const std::array<Eigen::Vector2d, 4> b{{{1, 0}, {0.5, 0.5}, {0, 1}, {-1, 0}}};
  EXPECT_EQ(corner_cycle_sum(b), 6.0);
  const std::array<Eigen::Vector2d, 4> c{{{0.5, 0.5}, {-0.5, 0.5}, {-0.5, -0.5}, {0.5, -0.5}}};
  EXPECT_EQ(corner_cycle_sum(c), 4.0);
}

TEST(CornerCycleSum, Errors) {
  const std::array<Eigen::Vector2d, 4> off{{{0.5, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  EXPECT_EQ(kind_of([&] { corner_cycle_sum(off); }), ErrorKind::NotOnUnitCircle);
  const std::array<Eigen::Vector2d, 4> cw{{{1, 0}, {0, -1}, {-1, 0}, {0, 1}}};
  EXPECT_EQ(kind_of([&] { corner_cycle_sum(cw); }), ErrorKind::NotCounterclockwise);
  const std::array<Eigen::Vector2d, 4> twice{{{1, 0}, {0, 1}, {1, 0}, {0, 1}}};
  EXPECT_EQ(kind_of([&] { corner_cycle_sum(twice); }), ErrorKind::NotCounterclockwise);
}

TEST(CornerCycleSum, EqualsBoundingPerimeterOnRandomQuadruples) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ang(0, 2 * kPi);
  std::uniform_int_distribution<int> coin(0, 9);
  for (int trial = 0; trial < 10000; ++trial) {
    std::array<double, 4> t{};
    for (auto& v : t) v = coin(rng) == 0 ? (coin(rng) % 4) * kPi / 2 : ang(rng);
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) continue;
    const double start = ang(rng);
    std::array<Eigen::Vector2d, 4> pts;
    for (std::size_t i = 0; i < 4; ++i) pts[i] = diamond(t[i] + start);
    double direct = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& a = pts[i];
      const auto& b = pts[(i + 1) % 4];
      direct += oracle::taxicab(a.x(), a.y(), b.x(), b.y());
    }
    double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
    for (const auto& p : pts) {
      xmin = std::min(xmin, p.x());
      xmax = std::max(xmax, p.x());
      ymin = std::min(ymin, p.y());
      ymax = std::max(ymax, p.y());
    }
    const double s = corner_cycle_sum(pts);
    EXPECT_NEAR(s, 2 * (xmax - xmin) + 2 * (ymax - ymin), 1e-12);
    EXPECT_NEAR(s, direct, 1e-12);
    EXPECT_LE(s, 8.0 + 1e-12);
    if (s > 8.0 - 1e-12) {
      int at_corners = 0;
      for (const auto& p : pts) {
        for (const Eigen::Vector2d c : {Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1), Eigen::Vector2d(-1, 0),
                                        Eigen::Vector2d(0, -1)}) {
          at_corners += (p - c).norm() < 1e-9;
        }
      }
      EXPECT_EQ(at_corners, 4);
    }
  }
}

// No isometry fixing (-1,0) and (0,-1) can swap (1,0) and (0,1).
TEST(TaxicabProofSteps, MidpointObstructionRulesOutCornerSwap) {
  auto dt = [](double x1, double y1, double x2, double y2) { return oracle::taxicab(x1, y1, x2, y2); };
  EXPECT_EQ(dt(-0.5, 0.5, -1, 0), 1.0);
  EXPECT_EQ(dt(-0.5, 0.5, 0, 1), 1.0);
  EXPECT_EQ(dt(-0.5, 0.5, 0, 0), 1.0);
  // Points at distance 1 from (-1,0) and (1,0), scanned on a dyadic grid.
  std::vector<Eigen::Vector2d> hits;
  for (int i = -256; i <= 256; ++i) {
    for (int j = -256; j <= 256; ++j) {
      const double x = i / 64.0;
      const double y = j / 64.0;
      if (dt(x, y, -1, 0) == 1.0 && dt(x, y, 1, 0) == 1.0) hits.emplace_back(x, y);
    }
  }
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0], Eigen::Vector2d(0, 0));
  EXPECT_NE(dt(0, 0, 0, 0), 1.0);  // the origin is not on the unit circle
}

// Once the corners are fixed, (a, 1-a) is pinned by its distances.
TEST(TaxicabProofSteps, SegmentPointIsPinnedByDistances) {
  std::vector<Eigen::Vector2d> circle;
  for (int k = 0; k < 4096; ++k) circle.push_back(diamond(2 * kPi * k / 4096.0));
  for (int i = 0; i <= 64; ++i) {
    const double a = i / 64.0;
    const Eigen::Vector2d p(a, 1 - a);
    EXPECT_EQ(oracle::taxicab(p.x(), p.y(), 1, 0) + oracle::taxicab(p.x(), p.y(), 0, 1), 2.0);
    EXPECT_NEAR(oracle::taxicab(p.x(), p.y(), 0, 1), 2 * a, 1e-15);
    for (const auto& q : circle) {
      const double sum = oracle::taxicab(q.x(), q.y(), 1, 0) + oracle::taxicab(q.x(), q.y(), 0, 1);
      const bool on_segment = q.x() >= -1e-12 && q.y() >= -1e-12;
      if (!on_segment) EXPECT_GT(sum, 2.0 + 1e-9);
      if (on_segment && std::fabs(oracle::taxicab(q.x(), q.y(), 0, 1) - 2 * a) < 1e-12) {
        EXPECT_LT((q - p).norm(), 1e-9);
      }
    }
  }
}

TEST(MidpointAffinity, Examples) {
  EXPECT_TRUE(check_midpoint_affinity(octic_element(OcticName::Rot90).map, MetricTag::lp(3), 1000, 1).verdict);
  const PointMap cube = [](const Point& p) { return Point{p[0] * p[0] * p[0], p[1] * p[1] * p[1]}; };
  const auto r = check_midpoint_affinity(cube, MetricTag::lp(3), 1000, 1);
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness);
  ASSERT_TRUE(r.witness->lambda);
  EXPECT_GE(*r.witness->lambda, 0.0);
  EXPECT_LE(*r.witness->lambda, 1.0);
  for (const auto& m : {MetricTag::lp(1), MetricTag::lp(2.5), MetricTag::linf()}) {
    EXPECT_TRUE(check_midpoint_affinity(AffineMap::translation(vec({4, -7})), m, 1000, 2).verdict);
  }
}

TEST(MidpointAffinity, HoldsForVerifiedIsometriesOfStrictlyConvexMetrics) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-5, 5);
  for (const auto& m : {MetricTag::lp(1.5), MetricTag::lp(3), MetricTag::lp(7)}) {
    ASSERT_TRUE(is_strictly_convex(m));
    for (const auto& e : octic_group()) {
      const AffineMap f(e.map.matrix(), vec({u(rng), u(rng)}));
      if (verify_isometry(f, m, 200, 1).verdict) EXPECT_TRUE(check_midpoint_affinity(f, m, 200, 1).verdict);
    }
  }
  for (int i = 0; i < 50; ++i) {
    const auto f = AffineMap::rotation(u(rng), vec({u(rng), u(rng)}));
    ASSERT_TRUE(verify_isometry(f, MetricTag::lp(2), 200, i).verdict);
    EXPECT_TRUE(check_midpoint_affinity(f, MetricTag::lp(2), 200, i).verdict);
  }
}

TEST(BallProbe, Examples) {
  const auto a = ball_intersection_probe(Point{0, 0}, Point{3, 1}, 0.0, MetricTag::lp(3));
  EXPECT_EQ(a.witness, (Point{0, 0}));

  const auto b = ball_intersection_probe(Point{0, 0}, Point{2, 0}, 0.5, MetricTag::lp(2));
  EXPECT_LT((b.witness.coords() - vec({1, 0})).norm(), 1e-15);
  EXPECT_EQ(b.extra_points_found, 0u);
  EXPECT_EQ(b.samples_tested, kDefaultProbeSamples);

  const auto c = ball_intersection_probe(Point{0, 0}, Point{1, 1}, 0.5, MetricTag::lp(1));
  EXPECT_GT(c.extra_points_found, 0u);
  EXPECT_EQ(oracle::taxicab(1, 0, 0, 0), 1.0);
  EXPECT_EQ(oracle::taxicab(1, 0, 1, 1), 1.0);

  EXPECT_EQ(kind_of([] { ball_intersection_probe(Point{1, 1}, Point{1, 1}, 0.5, MetricTag::lp(3)); }),
            ErrorKind::CoincidentPoints);
}

TEST(BallProbe, StrictlyConvexHasNoExtras) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(-10, 10);
  std::uniform_real_distribution<double> lam(0.05, 0.95);
  for (const auto& m : {MetricTag::lp(1.5), MetricTag::lp(2), MetricTag::lp(3)}) {
    for (int i = 0; i < 20; ++i) {
      const Point x{u(rng), u(rng)};
      const Point y{u(rng), u(rng)};
      const double l = lam(rng);
      const auto r = ball_intersection_probe(x, y, l, m, 2000, i);
      EXPECT_EQ(r.extra_points_found, 0u);
      const double d = distance(m, x, y);
      EXPECT_LE(distance(m, x, r.witness), l * d * (1 + 1e-12) + 1e-12);
      EXPECT_LE(distance(m, y, r.witness), (1 - l) * d * (1 + 1e-12) + 1e-12);
    }
  }
  // Large p is flat to order t^p near the axes, so keep its witness direction
  // diagonal where the boundary bends enough to clear the 1e-9 inclusion slack.
  EXPECT_EQ(ball_intersection_probe(Point{0, 0}, Point{4, 4}, 0.5, MetricTag::lp(7)).extra_points_found, 0u);
  const auto linf = ball_intersection_probe(Point{0, 0}, Point{2, 0}, 0.5, MetricTag::linf());
  EXPECT_GT(linf.extra_points_found, 0u);
}

TEST(BallProbe, AxisAlignedCubicCountsSlackNeighbours) {
  // Along an axis the l^3 sphere leaves its tangent only like t^3 / 3, so the
  // two samples beside the witness (t ~ 5e-4) land inside the 1e-9 slack.
  const auto r = ball_intersection_probe(Point{0, 0}, Point{2, 0}, 0.5, MetricTag::lp(3));
  EXPECT_EQ(r.extra_points_found, 2u);
  const double t = 0.5 * 2 * kPi / static_cast<double>(kDefaultProbeSamples);
  EXPECT_LT(std::pow(t, 3) / 3, 1e-9);
}
