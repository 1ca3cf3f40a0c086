#pragma once

#include "isometry/metrics.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <vector>

namespace isometry::conics {

using Vertex = Eigen::Vector2d;
using Chain = std::vector<Vertex>;

struct PolyShape {
  enum class Kind { ClosedPolygon, OpenPolylineSet };
  Kind kind;
  std::vector<Chain> chains;
};

struct Box {
  double xmin = -10.0;
  double ymin = -10.0;
  double xmax = 10.0;
  double ymax = 10.0;
};

double taxicab(const Vertex& a, const Vertex& b);

/// Diamond with vertices center + (r,0), (0,r), (-r,0), (0,-r).
PolyShape taxicab_circle(const Vertex& center, double r);

/// {x : d_T(x, f1) + d_T(x, f2) = s}, exact. Requires s > d_T(f1, f2); at
/// equality the locus is a filled rectangle and SumTooSmall is thrown.
/// Vertices run counterclockwise from the smallest polar angle about the foci
/// midpoint.
PolyShape taxicab_ellipse(const Vertex& f1, const Vertex& f2, double s);

/// Both branches of {x : |d_T(x, f1) - d_T(x, f2)| = k} clipped to `box`.
/// The d1 - d2 = +k branch comes first. Throws InvalidGap unless
/// 0 < k < d_T(f1, f2) and DegenerateLocus when a whole cell attains +-k.
PolyShape taxicab_hyperbola(const Vertex& f1, const Vertex& f2, double k, const Box& box = {});

/// n samples of the l^p unit circle at t = 2 pi i / n using
/// (sign(cos t)|cos t|^(2/p), sign(sin t)|sin t|^(2/p)); for l^inf, n points
/// evenly spaced along the square from (1, 1) counterclockwise.
PolyShape lp_circle_points(const MetricTag& m, std::size_t n);

/// `x,y` header, one block per chain, blank line between blocks.
std::string to_csv(const PolyShape& shape);

/// Standalone SVG 1.1 document, one path per chain.
std::string to_svg(const PolyShape& shape);

}  // namespace isometry::conics
