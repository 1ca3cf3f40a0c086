#pragma once

// JSON and text encodings shared by the CLI and tests.

#include "isometry/affine.hpp"
#include "isometry/euclid.hpp"
#include "isometry/lp.hpp"
#include "isometry/noneuclid.hpp"

#include "json.hpp"

#include <string>

namespace isometry::io {

using nlohmann::json;

/// Shortest round-trip decimal, locale independent.
std::string format_number(double v);

json to_json(const Point& p);
json to_json(const Eigen::VectorXd& v);
json to_json(const Eigen::MatrixXd& m);

json to_json(const AffineMap& f);
AffineMap affine_from_json(const json& j);

json to_json(const Hyperplane& h);
Hyperplane hyperplane_from_json(const json& j);

json to_json(const euclid::IsometryClass& cls);

json to_json(const lp::VerificationReport& report);

json to_json(const noneuclid::Geodesic& g);
noneuclid::Geodesic geodesic_from_json(const json& j);
noneuclid::GreatCircle great_circle_from_json(const json& j);
json to_json(const noneuclid::NonEuclidClass& cls);

}  // namespace isometry::io
