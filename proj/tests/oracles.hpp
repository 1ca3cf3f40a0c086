#pragma once

// Test-only reference computations. Nothing here calls into the code paths it
// is used to check.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

/// Textbook l^p distance in long double, no overflow guard.
inline double naive_lp(const Eigen::VectorXd& a, const Eigen::VectorXd& b, long double p) {
  long double acc = 0.0L;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    acc += std::pow(std::fabs(static_cast<long double>(a[i]) - b[i]), p);
  }
  return static_cast<double>(std::pow(acc, 1.0L / p));
}

inline double naive_linf(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double taxicab(double x1, double y1, double x2, double y2) {
  return std::fabs(x1 - x2) + std::fabs(y1 - y2);
}

/// Reflection of x in the line through p with direction d, built from the
/// projection onto the line rather than from a normal and offset.
inline Eigen::Vector2d reflect_in_line(const Eigen::Vector2d& p, const Eigen::Vector2d& d,
                                       const Eigen::Vector2d& x) {
  const Eigen::Vector2d u = d.normalized();
  const Eigen::Vector2d foot = p + u.dot(x - p) * u;
  return 2.0 * foot - x;
}

inline double point_segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                                     const Eigen::Vector2d& b) {
  const Eigen::Vector2d ab = b - a;
  const double len2 = ab.squaredNorm();
  const double t = len2 == 0.0 ? 0.0 : std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

inline double point_polyline_distance(const Eigen::Vector2d& p,
                                      const std::vector<Eigen::Vector2d>& chain, bool closed) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = chain.size();
  const std::size_t edges = closed ? n : n - 1;
  for (std::size_t i = 0; i < edges; ++i) {
    best = std::min(best, point_segment_distance(p, chain[i], chain[(i + 1) % n]));
  }
  return best;
}

struct GridCell {
  double cx;
  double cy;
  double diagonal;
};

/// Marching-squares style scan: every grid cell whose corner values of f do
/// not share a sign (one of them strictly positive, one strictly negative, or
/// an exact zero corner).
inline std::vector<GridCell> sign_change_cells(const std::function<double(double, double)>& f,
                                               double xmin, double ymin, double xmax, double ymax,
                                               int n) {
  const double hx = (xmax - xmin) / n;
  const double hy = (ymax - ymin) / n;
  std::vector<double> values(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      values[static_cast<std::size_t>(i * (n + 1) + j)] = f(xmin + i * hx, ymin + j * hy);
    }
  }
  std::vector<GridCell> cells;
  const double diag = std::hypot(hx, hy);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool pos = false;
      bool neg = false;
      bool zero = false;
      for (int di = 0; di <= 1; ++di) {
        for (int dj = 0; dj <= 1; ++dj) {
          const double v = values[static_cast<std::size_t>((i + di) * (n + 1) + j + dj)];
          pos |= v > 0.0;
          neg |= v < 0.0;
          zero |= v == 0.0;
        }
      }
      if ((pos && neg) || zero) {
        cells.push_back({xmin + (i + 0.5) * hx, ymin + (j + 0.5) * hy, diag});
      }
    }
  }
  return cells;
}

inline Eigen::Matrix2d rotation(double angle) {
  Eigen::Matrix2d r;
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}


}  // namespace oracle
