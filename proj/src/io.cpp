#include "isometry/io.hpp"

#include "isometry/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace isometry::io {

namespace {

Eigen::VectorXd vector_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    throw GeometryError(ErrorKind::InvalidArgument, std::string(what) + " must be a nonempty array");
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      throw GeometryError(ErrorKind::InvalidArgument, std::string(what) + " entries must be numbers");
    }
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw GeometryError(ErrorKind::InvalidArgument, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) {
    v = 0.0;  // no "-0"
  }
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

json to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(v[i] == 0.0 ? 0.0 : v[i]);
  }
  return out;
}

json to_json(const Point& p) { return to_json(p.coords()); }

json to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out.push_back(to_json(Eigen::VectorXd(m.row(r).transpose())));
  }
  return out;
}

json to_json(const AffineMap& f) {
  return {{"matrix", to_json(f.matrix())}, {"translation", to_json(f.translation())}};
}

AffineMap affine_from_json(const json& j) {
  const json& rows = field(j, "matrix");
  if (!rows.is_array() || rows.empty()) {
    throw GeometryError(ErrorKind::InvalidArgument, "matrix must be a nonempty array of rows");
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Eigen::VectorXd row = vector_from_json(rows[static_cast<std::size_t>(r)], "matrix row");
    if (row.size() != n) {
      throw GeometryError(ErrorKind::DimensionMismatch, "matrix must be square");
    }
    m.row(r) = row.transpose();
  }
  Eigen::VectorXd t = j.contains("translation") ? vector_from_json(j.at("translation"), "translation")
                                                : Eigen::VectorXd::Zero(n);
  return AffineMap(std::move(m), std::move(t));
}

json to_json(const Hyperplane& h) {
  return {{"normal", to_json(h.normal())}, {"offset", h.offset() == 0.0 ? 0.0 : h.offset()}};
}

Hyperplane hyperplane_from_json(const json& j) {
  const json& off = field(j, "offset");
  if (!off.is_number()) {
    throw GeometryError(ErrorKind::InvalidArgument, "offset must be a number");
  }
  return Hyperplane(vector_from_json(field(j, "normal"), "normal"), off.get<double>());
}

json to_json(const euclid::IsometryClass& cls) {
  using namespace euclid;
  json out{{"type", type_name(cls)}};
  std::visit(
      [&out](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Translation>) {
          out["vector"] = to_json(Eigen::VectorXd(c.vector));
        } else if constexpr (std::is_same_v<T, Rotation>) {
          out["center"] = to_json(Eigen::VectorXd(c.center));
          out["angle"] = c.angle;
        } else if constexpr (std::is_same_v<T, Reflection>) {
          out["axis"] = to_json(c.axis);
        } else if constexpr (std::is_same_v<T, GlideReflection>) {
          out["axis"] = to_json(c.axis);
          out["glide"] = to_json(Eigen::VectorXd(c.glide));
        }
      },
      cls);
  return out;
}

json to_json(const lp::VerificationReport& report) {
  json out{{"verdict", report.verdict},
           {"samples", report.samples_tested},
           {"max_violation", report.max_violation}};
  if (report.witness) {
    json w{{"x", to_json(report.witness->first)},
           {"y", to_json(report.witness->second)},
           {"violation", report.witness->violation}};
    if (report.witness->lambda) {
      w["lambda"] = *report.witness->lambda;
    }
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const noneuclid::Geodesic& g) {
  using namespace noneuclid;
  if (const auto* d = std::get_if<Diameter>(&g)) {
    return {{"kind", "diameter"}, {"direction", to_json(Eigen::VectorXd(d->direction))}};
  }
  const auto& a = std::get<OrthoArc>(g);
  return {{"kind", "arc"}, {"center", to_json(Eigen::VectorXd(a.center))}, {"radius", a.radius}};
}

noneuclid::Geodesic geodesic_from_json(const json& j) {
  const json& kind = field(j, "kind");
  if (kind == "diameter") {
    const Eigen::VectorXd d = vector_from_json(field(j, "direction"), "direction");
    if (d.size() != 2) {
      throw GeometryError(ErrorKind::DimensionMismatch, "direction must have 2 entries");
    }
    return noneuclid::make_diameter(d);
  }
  if (kind == "arc") {
    const Eigen::VectorXd c = vector_from_json(field(j, "center"), "center");
    const json& r = field(j, "radius");
    if (c.size() != 2 || !r.is_number()) {
      throw GeometryError(ErrorKind::InvalidArgument, "arc needs a 2-entry center and numeric radius");
    }
    return noneuclid::make_arc(c, r.get<double>());
  }
  throw GeometryError(ErrorKind::InvalidArgument, "geodesic kind must be \"diameter\" or \"arc\"");
}

noneuclid::GreatCircle great_circle_from_json(const json& j) {
  const Eigen::VectorXd n = vector_from_json(j.is_object() ? field(j, "normal") : j, "normal");
  if (n.size() != 3) {
    throw GeometryError(ErrorKind::DimensionMismatch, "great circle normal must have 3 entries");
  }
  return noneuclid::GreatCircle::from_unnormalized(n);
}

json to_json(const noneuclid::NonEuclidClass& cls) {
  using namespace noneuclid;
  json out{{"type", type_name(cls)}};
  std::visit(
      [&out](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SphereReflection>) {
          out["normal"] = to_json(Eigen::VectorXd(c.normal));
        } else if constexpr (std::is_same_v<T, SphereRotation> || std::is_same_v<T, SphereGlideReflection>) {
          out["axis"] = to_json(Eigen::VectorXd(c.axis));
          out["angle"] = c.angle;
        } else if constexpr (std::is_same_v<T, HypRotation>) {
          out["center"] = to_json(Eigen::VectorXd(c.center));
        } else if constexpr (std::is_same_v<T, Horolation>) {
          out["ideal_point"] = to_json(Eigen::VectorXd(c.ideal_point));
        } else if constexpr (std::is_same_v<T, HypTranslation>) {
          out["axis"] = to_json(c.axis);
        } else if constexpr (std::is_same_v<T, HypReflection>) {
          out["mirror"] = to_json(c.mirror);
        } else if constexpr (std::is_same_v<T, HypGlideReflection>) {
          out["min_displacement"] = c.min_displacement;
        }
      },
      cls);
  return out;
}

}  // namespace isometry::io
