#include "isometry/conics.hpp"

#include "isometry/errors.hpp"
#include "isometry/io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

namespace isometry::conics {

namespace {

constexpr double kSnap = 1e-12;

struct Segment {
  Vertex a;
  Vertex b;
};

struct Cell {
  double x0, x1, y0, y1;
};

// Level function restricted to one cell: a x + b y + c.
struct AffineForm {
  double a;
  double b;
  double c;
};

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

bool close(const Vertex& p, const Vertex& q, double tol = kSnap) {
  return (p - q).cwiseAbs().maxCoeff() <= tol * (1.0 + std::max(p.cwiseAbs().maxCoeff(), q.cwiseAbs().maxCoeff()));
}

double cross(const Vertex& u, const Vertex& v) { return u.x() * v.y() - u.y() * v.x(); }

// Breakpoints strictly inside (lo, hi) split the range into affine bands.
std::vector<double> bands(double lo, double hi, double p, double q) {
  std::vector<double> out{lo};
  for (double v : {std::min(p, q), std::max(p, q)}) {
    if (v > out.back() && v < hi) {
      out.push_back(v);
    }
  }
  out.push_back(hi);
  return out;
}

std::vector<Cell> make_cells(const Box& box, const Vertex& f1, const Vertex& f2) {
  const auto xs = bands(box.xmin, box.xmax, f1.x(), f2.x());
  const auto ys = bands(box.ymin, box.ymax, f1.y(), f2.y());
  std::vector<Cell> cells;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      cells.push_back({xs[i], xs[i + 1], ys[j], ys[j + 1]});
    }
  }
  return cells;
}

// Coefficients of w1 d_T(., f1) + w2 d_T(., f2) on a cell.
AffineForm form_on(const Cell& cell, const Vertex& f1, double w1, const Vertex& f2, double w2) {
  const double xc = 0.5 * (cell.x0 + cell.x1);
  const double yc = 0.5 * (cell.y0 + cell.y1);
  AffineForm form{0.0, 0.0, 0.0};
  for (const auto& [f, w] : {std::pair{f1, w1}, std::pair{f2, w2}}) {
    const double sx = sgn(xc - f.x());
    const double sy = sgn(yc - f.y());
    form.a += w * sx;
    form.b += w * sy;
    form.c -= w * (sx * f.x() + sy * f.y());
  }
  return form;
}

// Portion of {a x + b y = k} inside the cell, if it is a proper segment.
std::optional<Segment> clip(const AffineForm& form, double k, const Cell& cell) {
  const double rhs = k - form.c;
  std::vector<Vertex> hits;
  auto add = [&](const Vertex& v) {
    for (const auto& h : hits) {
      if (close(h, v)) {
        return;
      }
    }
    hits.push_back(v);
  };
  const double ytol = kSnap * (1.0 + std::max(std::abs(cell.y0), std::abs(cell.y1)));
  const double xtol = kSnap * (1.0 + std::max(std::abs(cell.x0), std::abs(cell.x1)));
  if (form.b != 0.0) {
    for (double x : {cell.x0, cell.x1}) {
      const double y = (rhs - form.a * x) / form.b;
      if (y >= cell.y0 - ytol && y <= cell.y1 + ytol) {
        add({x, std::clamp(y, cell.y0, cell.y1)});
      }
    }
  }
  if (form.a != 0.0) {
    for (double y : {cell.y0, cell.y1}) {
      const double x = (rhs - form.b * y) / form.a;
      if (x >= cell.x0 - xtol && x <= cell.x1 + xtol) {
        add({std::clamp(x, cell.x0, cell.x1), y});
      }
    }
  }
  if (hits.size() < 2) {
    return std::nullopt;
  }
  // A line meets a rectangle's boundary in at most two distinct points unless
  // it passes through corners; keep the farthest pair.
  std::size_t bi = 0;
  std::size_t bj = 1;
  double best = -1.0;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    for (std::size_t j = i + 1; j < hits.size(); ++j) {
      const double len = (hits[i] - hits[j]).squaredNorm();
      if (len > best) {
        best = len;
        bi = i;
        bj = j;
      }
    }
  }
  if (close(hits[bi], hits[bj])) {
    return std::nullopt;
  }
  return Segment{hits[bi], hits[bj]};
}

// Drops vertices lying on the segment between their neighbours.
Chain drop_collinear(const Chain& chain, bool closed) {
  if (chain.size() < 3) {
    return chain;
  }
  Chain out;
  const std::size_t n = chain.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool endpoint = !closed && (i == 0 || i + 1 == n);
    if (!endpoint) {
      const Vertex& prev = chain[(i + n - 1) % n];
      const Vertex& next = chain[(i + 1) % n];
      const Vertex u = chain[i] - prev;
      const Vertex v = next - chain[i];
      if (std::abs(cross(u, v)) <= kSnap * (1.0 + u.norm() * v.norm()) && u.dot(v) > 0.0) {
        continue;
      }
    }
    out.push_back(chain[i]);
  }
  return out;
}

// Walks segments sharing endpoints into polylines. Each chain starts at its
// lexicographically smallest free end.
std::vector<Chain> assemble(std::vector<Segment> segs) {
  std::vector<Chain> chains;
  auto lex_less = [](const Vertex& p, const Vertex& q) {
    return p.x() < q.x() || (p.x() == q.x() && p.y() < q.y());
  };
  while (!segs.empty()) {
    auto degree = [&](const Vertex& v) {
      int d = 0;
      for (const auto& s : segs) {
        d += close(s.a, v) + close(s.b, v);
      }
      return d;
    };
    std::optional<Vertex> start;
    for (const auto& s : segs) {
      for (const Vertex& v : {s.a, s.b}) {
        if (degree(v) == 1 && (!start || lex_less(v, *start))) {
          start = v;
        }
      }
    }
    if (!start) {
      start = segs.front().a;
    }
    Chain chain{*start};
    bool extended = true;
    while (extended) {
      extended = false;
      for (auto it = segs.begin(); it != segs.end(); ++it) {
        if (close(it->a, chain.back())) {
          chain.push_back(it->b);
        } else if (close(it->b, chain.back())) {
          chain.push_back(it->a);
        } else {
          continue;
        }
        segs.erase(it);
        extended = true;
        break;
      }
    }
    chains.push_back(drop_collinear(chain, false));
  }
  return chains;
}

void push_unique(std::vector<Segment>& segs, const Segment& s) {
  for (const auto& t : segs) {
    if ((close(t.a, s.a) && close(t.b, s.b)) || (close(t.a, s.b) && close(t.b, s.a))) {
      return;
    }
  }
  segs.push_back(s);
}

void require_finite(const Vertex& v, const char* what) {
  if (!v.allFinite()) {
    throw GeometryError(ErrorKind::NonFinite, std::string(what) + " must be finite");
  }
}

}  // namespace

double taxicab(const Vertex& a, const Vertex& b) { return (a - b).cwiseAbs().sum(); }

PolyShape taxicab_circle(const Vertex& center, double r) {
  require_finite(center, "center");
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw GeometryError(ErrorKind::NonpositiveRadius, "taxicab circle radius must be positive");
  }
  const double x = center.x();
  const double y = center.y();
  return {PolyShape::Kind::ClosedPolygon,
          {{Vertex(x + r, y), Vertex(x, y + r), Vertex(x - r, y), Vertex(x, y - r)}}};
}

PolyShape taxicab_ellipse(const Vertex& f1, const Vertex& f2, double s) {
  require_finite(f1, "focus");
  require_finite(f2, "focus");
  const double gap = taxicab(f1, f2);
  if (!(s > gap) || !std::isfinite(s)) {
    throw GeometryError(ErrorKind::SumTooSmall,
                        "ellipse sum must exceed the taxicab distance between the foci");
  }
  const Box bounds{std::min(f1.x(), f2.x()) - s, std::min(f1.y(), f2.y()) - s,
                   std::max(f1.x(), f2.x()) + s, std::max(f1.y(), f2.y()) + s};
  std::vector<Vertex> vertices;
  for (const auto& cell : make_cells(bounds, f1, f2)) {
    const auto form = form_on(cell, f1, 1.0, f2, 1.0);
    if (form.a == 0.0 && form.b == 0.0) {
      continue;  // the sum is d_T(f1, f2) < s on the box between the foci
    }
    if (const auto seg = clip(form, s, cell)) {
      for (const Vertex& v : {seg->a, seg->b}) {
        if (std::none_of(vertices.begin(), vertices.end(), [&](const Vertex& w) { return close(v, w); })) {
          vertices.push_back(v);
        }
      }
    }
  }
  const Vertex mid = 0.5 * (f1 + f2);
  auto polar = [&](const Vertex& v) {
    double t = std::atan2(v.y() - mid.y(), v.x() - mid.x());
    return t < 0.0 ? t + 2.0 * std::numbers::pi : t;
  };
  std::sort(vertices.begin(), vertices.end(),
            [&](const Vertex& p, const Vertex& q) { return polar(p) < polar(q); });
  return {PolyShape::Kind::ClosedPolygon, {drop_collinear(vertices, true)}};
}

PolyShape taxicab_hyperbola(const Vertex& f1, const Vertex& f2, double k, const Box& box) {
  require_finite(f1, "focus");
  require_finite(f2, "focus");
  if (!(box.xmin < box.xmax && box.ymin < box.ymax)) {
    throw GeometryError(ErrorKind::InvalidArgument, "clipping box is empty");
  }
  const double gap = taxicab(f1, f2);
  if (!(k > 0.0 && k < gap)) {
    throw GeometryError(ErrorKind::InvalidGap,
                        "hyperbola gap must satisfy 0 < k < d_T(f1, f2)");
  }
  std::vector<Segment> near_f2;
  std::vector<Segment> near_f1;
  for (const auto& cell : make_cells(box, f1, f2)) {
    const auto form = form_on(cell, f1, 1.0, f2, -1.0);
    if (form.a == 0.0 && form.b == 0.0) {
      if (std::abs(std::abs(form.c) - k) <= kSnap * (1.0 + k)) {
        std::ostringstream os;
        os << "difference is constantly " << form.c << " on the cell [" << cell.x0 << ", " << cell.x1
           << "] x [" << cell.y0 << ", " << cell.y1 << "]";
        throw GeometryError(ErrorKind::DegenerateLocus, os.str());
      }
      continue;
    }
    if (const auto seg = clip(form, k, cell)) {
      push_unique(near_f2, *seg);
    }
    if (const auto seg = clip(form, -k, cell)) {
      push_unique(near_f1, *seg);
    }
  }
  PolyShape shape{PolyShape::Kind::OpenPolylineSet, {}};
  for (auto* branch : {&near_f2, &near_f1}) {
    for (auto& chain : assemble(*branch)) {
      shape.chains.push_back(std::move(chain));
    }
  }
  return shape;
}

PolyShape lp_circle_points(const MetricTag& m, std::size_t n) {
  if (n < 4) {
    throw GeometryError(ErrorKind::TooFewPoints, "need at least 4 points");
  }
  Chain pts;
  pts.reserve(n);
  if (m.is_linf()) {
    // Perimeter 8 walked from (1, 1) through (-1, 1), (-1, -1), (1, -1).
    static const std::array<Vertex, 4> corners{Vertex(1, 1), Vertex(-1, 1), Vertex(-1, -1), Vertex(1, -1)};
    for (std::size_t i = 0; i < n; ++i) {
      const double along = 8.0 * static_cast<double>(i) / static_cast<double>(n);
      const auto side = std::min<std::size_t>(static_cast<std::size_t>(along / 2.0), 3);
      const double frac = (along - 2.0 * static_cast<double>(side)) / 2.0;
      const Vertex& from = corners[side];
      const Vertex& to = corners[(side + 1) % 4];
      pts.push_back(frac == 0.0 ? from : Vertex(from + frac * (to - from)));
    }
    return {PolyShape::Kind::ClosedPolygon, {std::move(pts)}};
  }
  const double expo = 2.0 / m.p();
  auto shape_coord = [expo](double c) { return std::copysign(std::pow(std::abs(c), expo), c); };
  for (std::size_t i = 0; i < n; ++i) {
    double c = 0.0;
    double s = 0.0;
    if ((4 * i) % n == 0) {
      // Quarter turns land exactly on the axes.
      static constexpr std::array<std::array<double, 2>, 4> axis{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
      const auto q = axis[(4 * i) / n];
      c = q[0];
      s = q[1];
    } else {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
      c = std::cos(t);
      s = std::sin(t);
    }
    pts.emplace_back(c == 0.0 ? 0.0 : shape_coord(c), s == 0.0 ? 0.0 : shape_coord(s));
  }
  return {PolyShape::Kind::ClosedPolygon, {std::move(pts)}};
}

std::string to_csv(const PolyShape& shape) {
  std::string out;
  for (std::size_t i = 0; i < shape.chains.size(); ++i) {
    if (i > 0) {
      out += '\n';
    }
    out += "x,y\n";
    for (const auto& v : shape.chains[i]) {
      out += io::format_number(v.x());
      out += ',';
      out += io::format_number(v.y());
      out += '\n';
    }
  }
  return out;
}

std::string to_svg(const PolyShape& shape) {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = xmin;
  double xmax = -xmin;
  double ymax = -xmin;
  for (const auto& chain : shape.chains) {
    for (const auto& v : chain) {
      xmin = std::min(xmin, v.x());
      xmax = std::max(xmax, v.x());
      ymin = std::min(ymin, v.y());
      ymax = std::max(ymax, v.y());
    }
  }
  if (!std::isfinite(xmin)) {
    xmin = ymin = -1.0;
    xmax = ymax = 1.0;
  }
  const double mx = 0.05 * std::max(xmax - xmin, 1e-9);
  const double my = 0.05 * std::max(ymax - ymin, 1e-9);
  // y grows upward in the plane and downward in SVG: emit (x, -y).
  const double vx = xmin - mx;
  const double vy = -(ymax + my);
  const double vw = (xmax - xmin) + 2.0 * mx;
  const double vh = (ymax - ymin) + 2.0 * my;

  using io::format_number;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + format_number(vx) +
         " " + format_number(vy) + " " + format_number(vw) + " " + format_number(vh) + "\">\n";
  for (const auto& chain : shape.chains) {
    std::string d;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      d += i == 0 ? "M " : " L ";
      d += format_number(chain[i].x()) + " " + format_number(-chain[i].y() + 0.0);
    }
    if (shape.kind == PolyShape::Kind::ClosedPolygon) {
      d += " Z";
    }
    out += "  <path d=\"" + d + "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.02\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace isometry::conics
