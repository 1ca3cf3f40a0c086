#include "isometry/cli.hpp"

#include "isometry/conics.hpp"
#include "isometry/errors.hpp"
#include "isometry/euclid.hpp"
#include "isometry/io.hpp"
#include "isometry/lp.hpp"
#include "isometry/noneuclid.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace isometry::cli {

namespace {

using io::json;

/// Bad flags or flag values the parser itself cannot catch.
struct UsageError {
  std::string message;
};

struct CliConfig {
  std::string format;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
  std::size_t samples = 1000;
  std::string output_path;
};

double parse_double(std::string_view text, const char* what) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
  }
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty()) {
    throw UsageError{std::string("cannot parse ") + what + " \"" + std::string(text) + "\""};
  }
  return v;
}

double parse_exponent(const std::string& text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "+inf" || lower == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  return parse_double(text, "p");
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_double(std::string_view(text).substr(start, comma - start), what));
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

Point parse_point(const std::string& text) {
  const auto v = parse_list(text, "point");
  return Point(Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
}

Eigen::Vector2d parse_point2(const std::string& text) {
  const auto v = parse_list(text, "point");
  if (v.size() != 2) {
    throw UsageError{"expected a planar point x,y but got \"" + text + "\""};
  }
  return {v[0], v[1]};
}

// Point lists may be given as separate arguments or joined with ';'.
std::vector<Point> parse_points(const std::vector<std::string>& items) {
  std::vector<Point> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const auto semi = item.find(';', start);
      const auto piece = item.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
      if (!piece.empty()) {
        out.push_back(parse_point(piece));
      }
      if (semi == std::string::npos) {
        break;
      }
      start = semi + 1;
    }
  }
  return out;
}

// Inline JSON when the argument looks like JSON, otherwise a file path.
json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) {
      throw UsageError{"cannot open \"" + arg + "\""};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError{std::string("invalid JSON: ") + e.what()};
  }
}

json exponent_json(const MetricTag& m) {
  return m.is_linf() ? json("inf") : json(m.p());
}

void emit_error(std::ostream& err, std::string_view kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

void add_common(CLI::App& app, CliConfig& config, const std::vector<std::string>& formats,
                bool sampling) {
  app.add_option("--format", config.format, "output format (default " + formats.front() + ")")
      ->check(CLI::IsMember(formats));
  app.add_option("--output,-o", config.output_path, "write the result to this file");
  app.add_option("--tol", config.tolerance, "comparison tolerance")->check(CLI::PositiveNumber);
  if (sampling) {
    app.add_option("--seed", config.seed, "random seed");
    app.add_option("--samples", config.samples, "number of random samples")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isometries of metric planes: classification, decomposition, verification, conics"};
  app.name("isometry");
  app.require_subcommand(1, 1);

  CliConfig config;
  std::string p_text;
  std::string a_text;
  std::string b_text;
  std::string map_text;
  std::string mirrors_text;
  std::vector<std::string> src_items;
  std::vector<std::string> dst_items;
  std::optional<std::size_t> dim;

  auto* dist = app.add_subcommand("dist", "distance between two points");
  add_common(*dist, config, {"text", "json"}, false);
  dist->add_option("--p", p_text, "exponent, or inf")->required();
  dist->add_option("--a", a_text, "first point x,y,...")->required();
  dist->add_option("--b", b_text, "second point x,y,...")->required();

  auto* classify = app.add_subcommand("classify", "classify a planar Euclidean isometry");
  add_common(*classify, config, {"json"}, false);
  classify->add_option("--map", map_text, "affine map as JSON or a JSON file")->required();

  auto* decompose = app.add_subcommand("decompose", "mirrors realizing a point correspondence");
  add_common(*decompose, config, {"json"}, false);
  decompose->add_option("--src", src_items, "n+1 source points")->required()->expected(1, -1);
  decompose->add_option("--dst", dst_items, "n+1 target points")->required()->expected(1, -1);
  decompose->add_option("--dim", dim, "expected dimension n");

  auto* verify = app.add_subcommand("verify", "sampled isometry check under an l^p metric");
  add_common(*verify, config, {"json"}, true);
  verify->add_option("--map", map_text, "affine map as JSON or a JSON file")->required();
  verify->add_option("--p", p_text, "exponent, or inf")->required();

  auto* group = app.add_subcommand("group", "the eight origin-fixing isometries, verified");
  add_common(*group, config, {"json"}, true);
  group->add_option("--p", p_text, "exponent, or inf")->required();

  auto* midpoint = app.add_subcommand("midpoint", "affinity (Mazur-Ulam) check of a map");
  add_common(*midpoint, config, {"json"}, true);
  midpoint->add_option("--map", map_text, "affine map as JSON or a JSON file")->required();
  midpoint->add_option("--p", p_text, "exponent, or inf")->required();

  auto* sphere = app.add_subcommand("sphere", "classify 1-3 great-circle reflections");
  add_common(*sphere, config, {"json"}, false);
  sphere->add_option("--mirrors", mirrors_text, "JSON array of normals")->required();

  auto* hyper = app.add_subcommand("hyper", "classify 1-3 Poincare-disk reflections");
  add_common(*hyper, config, {"json"}, false);
  hyper->add_option("--mirrors", mirrors_text, "JSON array of geodesics")->required();

  auto* conic = app.add_subcommand("conic", "taxicab conics and l^p unit circles");
  conic->require_subcommand(1, 1);
  std::string center_text;
  std::string f1_text;
  std::string f2_text;
  std::string box_text;
  double radius = 0.0;
  double sum = 0.0;
  double gap = 0.0;
  std::size_t count = 64;

  auto* circle = conic->add_subcommand("circle", "taxicab circle");
  add_common(*circle, config, {"csv", "svg"}, false);
  circle->add_option("--center", center_text, "center x,y")->default_str("0,0");
  circle->add_option("--r", radius, "radius")->required();

  auto* ellipse = conic->add_subcommand("ellipse", "taxicab ellipse");
  add_common(*ellipse, config, {"csv", "svg"}, false);
  ellipse->add_option("--f1", f1_text, "first focus x,y")->required();
  ellipse->add_option("--f2", f2_text, "second focus x,y")->required();
  ellipse->add_option("--s", sum, "sum of focal distances")->required();

  auto* hyperbola = conic->add_subcommand("hyperbola", "taxicab hyperbola");
  add_common(*hyperbola, config, {"csv", "svg"}, false);
  hyperbola->add_option("--f1", f1_text, "first focus x,y")->required();
  hyperbola->add_option("--f2", f2_text, "second focus x,y")->required();
  hyperbola->add_option("--k", gap, "difference of focal distances")->required();
  hyperbola->add_option("--box", box_text, "clip box xmin,ymin,xmax,ymax")->default_str("-10,-10,10,10");

  auto* lpcircle = conic->add_subcommand("lpcircle", "sampled l^p unit circle");
  add_common(*lpcircle, config, {"csv", "svg"}, false);
  lpcircle->add_option("--p", p_text, "exponent, or inf")->required();
  lpcircle->add_option("--n", count, "number of points");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "UsageError", e.what());
    return kUsageError;
  }

  std::string text;
  int code = kSuccess;
  const bool conic_output = conic->parsed();
  if (config.format.empty()) {
    config.format = conic_output ? "csv" : (dist->parsed() ? "text" : "json");
  }
  try {
    const auto metric = [&] { return validate_p(parse_exponent(p_text)); };
    auto with_params = [&](json j, const MetricTag& m) {
      j["p"] = exponent_json(m);
      j["seed"] = config.seed;
      j["tolerance"] = config.tolerance;
      return j;
    };

    if (dist->parsed()) {
      const auto m = metric();
      const double d = distance(m, parse_point(a_text), parse_point(b_text));
      text = config.format == "json" ? json{{"p", exponent_json(m)}, {"distance", d}}.dump()
                                     : io::format_number(d);
      text += '\n';
    } else if (classify->parsed()) {
      const auto f = io::affine_from_json(load_json(map_text));
      const auto cls = euclid::classify(f, config.tolerance);
      json j = io::to_json(cls);
      j["parity"] = euclid::parity(f, config.tolerance) == euclid::Parity::Direct ? "direct" : "indirect";
      text = j.dump(2) + '\n';
    } else if (decompose->parsed()) {
      auto sources = parse_points(src_items);
      auto targets = parse_points(dst_items);
      if (dim && (sources.empty() || sources.front().dim() != *dim)) {
        throw UsageError{"points do not have the dimension given by --dim"};
      }
      const euclid::Correspondence c(std::move(sources), std::move(targets));
      const auto mirrors = euclid::decompose_nd(c);
      json list = json::array();
      for (const auto& h : mirrors) {
        list.push_back(io::to_json(h));
      }
      json j{{"dimension", c.dim()}, {"count", mirrors.size()}, {"mirrors", std::move(list)}};
      const auto composed = euclid::compose_mirrors(mirrors, c.dim());
      j["parity"] = euclid::parity(composed, 1e-6) == euclid::Parity::Direct ? "direct" : "indirect";
      if (c.dim() == 2) {
        j["class"] = io::to_json(euclid::classify(composed, config.tolerance));
      }
      text = j.dump(2) + '\n';
    } else if (verify->parsed()) {
      const auto m = metric();
      const auto f = io::affine_from_json(load_json(map_text));
      const auto report = lp::verify_isometry(f, m, config.samples, config.seed, config.tolerance);
      text = with_params(io::to_json(report), m).dump(2) + '\n';
      code = report.verdict ? kSuccess : kVerdictFalse;
    } else if (group->parsed()) {
      const auto m = metric();
      json elements = json::array();
      bool all = true;
      for (const auto& e : lp::octic_group()) {
        const auto report = lp::verify_isometry(e.map, m, config.samples, config.seed, config.tolerance);
        all = all && report.verdict;
        elements.push_back({{"name", lp::to_string(e.name)},
                            {"matrix", io::to_json(e.map.matrix())},
                            {"report", io::to_json(report)}});
      }
      json j{{"count", elements.size()}, {"all_verified", all}, {"elements", std::move(elements)}};
      j["samples"] = config.samples;
      text = with_params(std::move(j), m).dump(2) + '\n';
      code = all ? kSuccess : kVerdictFalse;
    } else if (midpoint->parsed()) {
      const auto m = metric();
      const auto f = io::affine_from_json(load_json(map_text));
      const auto report = lp::check_midpoint_affinity(f, m, config.samples, config.seed, config.tolerance);
      json j = with_params(io::to_json(report), m);
      j["strictly_convex"] = is_strictly_convex(m);
      text = j.dump(2) + '\n';
      code = report.verdict ? kSuccess : kVerdictFalse;
    } else if (sphere->parsed()) {
      const json list = load_json(mirrors_text);
      if (!list.is_array()) {
        throw UsageError{"--mirrors must be a JSON array"};
      }
      std::vector<noneuclid::GreatCircle> mirrors;
      for (const auto& item : list) {
        mirrors.push_back(io::great_circle_from_json(item));
      }
      text = io::to_json(noneuclid::classify_sphere(mirrors, config.tolerance)).dump(2) + '\n';
    } else if (hyper->parsed()) {
      const json list = load_json(mirrors_text);
      if (!list.is_array()) {
        throw UsageError{"--mirrors must be a JSON array"};
      }
      std::vector<noneuclid::Geodesic> mirrors;
      for (const auto& item : list) {
        mirrors.push_back(io::geodesic_from_json(item));
      }
      text = io::to_json(noneuclid::classify_hyperbolic(mirrors, config.tolerance)).dump(2) + '\n';
    } else {
      conics::PolyShape shape{conics::PolyShape::Kind::ClosedPolygon, {}};
      if (circle->parsed()) {
        const auto center = center_text.empty() ? Eigen::Vector2d::Zero().eval() : parse_point2(center_text);
        shape = conics::taxicab_circle(center, radius);
      } else if (ellipse->parsed()) {
        shape = conics::taxicab_ellipse(parse_point2(f1_text), parse_point2(f2_text), sum);
      } else if (hyperbola->parsed()) {
        conics::Box box;
        if (!box_text.empty()) {
          const auto v = parse_list(box_text, "box");
          if (v.size() != 4) {
            throw UsageError{"--box expects xmin,ymin,xmax,ymax"};
          }
          box = {v[0], v[1], v[2], v[3]};
        }
        shape = conics::taxicab_hyperbola(parse_point2(f1_text), parse_point2(f2_text), gap, box);
      } else {
        shape = conics::lp_circle_points(metric(), count);
      }
      text = config.format == "svg" ? conics::to_svg(shape) : conics::to_csv(shape);
    }
  } catch (const UsageError& e) {
    emit_error(err, "UsageError", e.message);
    return kUsageError;
  } catch (const InvalidExponentError& e) {
    err << json{{"error", to_string(e.kind())},
                {"message", e.what()},
                {"p", e.exponent()},
                {"direct", e.direct_distance()},
                {"via_origin", e.via_origin()}}
               .dump()
        << '\n';
    return kDomainError;
  } catch (const GeometryError& e) {
    emit_error(err, to_string(e.kind()), e.what());
    return kDomainError;
  }

  if (config.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file || !(file << text)) {
      emit_error(err, "IoError", "cannot write \"" + config.output_path + "\"");
      return kUsageError;
    }
  }
  return code;
}

}  // namespace isometry::cli
