#include "clothoid/io.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "clothoid/error.hpp"

namespace clothoid {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& what,
                          std::optional<std::size_t> index = std::nullopt) {
  throw Error(ErrorCode::ValidationError, path + ": " + what, index);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& path, std::optional<std::size_t> index = {}) {
  for (const auto& item : obj.items()) {
    if (allowed.count(item.key()) != 0) continue;
    if (item.key().find("deg") != std::string::npos) {
      invalid(path + "." + item.key(), "angles are accepted in radians only", index);
    }
    invalid(path + "." + item.key(), "unknown field", index);
  }
}

double finite_number(const json& v, const std::string& path,
                     std::optional<std::size_t> index = {}) {
  if (!v.is_number()) invalid(path, "expected a number", index);
  const double x = v.get<double>();
  if (!std::isfinite(x)) invalid(path, "expected a finite number", index);
  return x;
}

Point2 read_pair(const json& v, const std::string& path, std::size_t index) {
  if (!v.is_array() || v.size() != 2) invalid(path, "expected [x, y]", index);
  return {finite_number(v[0], path + "[0]", index), finite_number(v[1], path + "[1]", index)};
}

int read_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) invalid(path, "expected an integer");
  return v.get<int>();
}

SchemeDefaults read_scheme_defaults(const json& j) {
  if (!j.is_object()) invalid("scheme", "expected an object");
  reject_unknown_keys(j, {"scheme", "omega", "levels", "newton_steps"}, "scheme");
  SchemeDefaults d;
  if (j.contains("scheme")) {
    if (!j["scheme"].is_string()) invalid("scheme.scheme", "expected a string");
    d.scheme = j["scheme"].get<std::string>();
    parse_scheme_name(*d.scheme);
  }
  if (j.contains("omega")) d.omega = finite_number(j["omega"], "scheme.omega");
  if (j.contains("levels")) d.levels = read_int(j["levels"], "scheme.levels");
  if (j.contains("newton_steps")) d.newton_steps = read_int(j["newton_steps"], "scheme.newton_steps");
  return d;
}

json pair_json(Point2 p) { return json::array({p.real(), p.imag()}); }

}  // namespace

double angle_from_normal(Point2 normal) { return std::arg(normal) - kPi / 2; }

InputDocument input_from_json(const json& j, ParseOptions options) {
  if (!j.is_object()) invalid("$", "expected a JSON object");
  reject_unknown_keys(j, {"format", "closed", "couples", "scheme"}, "$");
  if (j.contains("format") && (!j["format"].is_number_integer() || j["format"].get<int>() != kFormatVersion)) {
    invalid("format", "unsupported format version (expected 1)");
  }

  InputDocument doc;
  if (!j.contains("closed") || !j["closed"].is_boolean()) invalid("closed", "expected a boolean");
  doc.closed = j["closed"].get<bool>();

  if (!j.contains("couples") || !j["couples"].is_array()) invalid("couples", "expected an array");
  const json& couples = j["couples"];
  if (couples.size() < 2) invalid("couples", "at least 2 couples are required");

  for (std::size_t i = 0; i < couples.size(); ++i) {
    const std::string path = "couples[" + std::to_string(i) + "]";
    const json& c = couples[i];
    if (!c.is_object()) invalid(path, "expected an object", i);
    reject_unknown_keys(c, {"p", "alpha", "normal"}, path, i);
    if (!c.contains("p")) invalid(path + ".p", "missing point", i);
    const bool has_alpha = c.contains("alpha");
    const bool has_normal = c.contains("normal");
    if (has_alpha == has_normal) invalid(path, "give exactly one of alpha or normal", i);

    HermiteCouple h;
    h.point = read_pair(c["p"], path + ".p", i);
    if (has_alpha) {
      h.angle = finite_number(c["alpha"], path + ".alpha", i);
    } else {
      const Point2 n = read_pair(c["normal"], path + ".normal", i);
      if (n == Point2(0.0, 0.0)) invalid(path + ".normal", "normal vector must be nonzero", i);
      h.angle = angle_from_normal(n);
    }
    doc.couples.push_back(h);
  }

  if (options.reject_coincident_points) {
    const std::size_t k = doc.couples.size();
    const std::size_t secants = doc.closed ? k : k - 1;
    for (std::size_t i = 0; i < secants; ++i) {
      if (is_degenerate_secant(doc.couples[i].point, doc.couples[(i + 1) % k].point)) {
        invalid("couples[" + std::to_string(i) + "]",
                "coincides with the next point", i);
      }
    }
  }

  if (j.contains("scheme")) doc.scheme = read_scheme_defaults(j["scheme"]);
  return doc;
}

InputDocument parse_input(std::string_view text, ParseOptions options) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": " + e.what());
  }
  return input_from_json(j, options);
}

json to_json(const InputDocument& doc) {
  json couples = json::array();
  for (const auto& h : doc.couples) {
    couples.push_back({{"p", pair_json(h.point)}, {"alpha", h.angle}});
  }
  json j = {{"format", kFormatVersion}, {"closed", doc.closed}, {"couples", couples}};
  if (doc.scheme) {
    json s = json::object();
    if (doc.scheme->scheme) s["scheme"] = *doc.scheme->scheme;
    if (doc.scheme->omega) s["omega"] = *doc.scheme->omega;
    if (doc.scheme->levels) s["levels"] = *doc.scheme->levels;
    if (doc.scheme->newton_steps) s["newton_steps"] = *doc.scheme->newton_steps;
    j["scheme"] = s;
  }
  return j;
}

std::string serialize_input(const InputDocument& doc) { return to_json(doc).dump(2) + "\n"; }

SchemeSpec parse_scheme_name(std::string_view name) {
  if (name == "fourpoint") return SchemeSpec::four_point(-1.0 / 18.0);
  if (name.size() >= 3 && name.substr(0, 2) == "lr") {
    int n = 0;
    const auto* first = name.data() + 2;
    const auto* last = name.data() + name.size();
    const auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && ptr == last && n >= 1 && n <= 8) return SchemeSpec::lane_riesenfeld(n);
  }
  throw Error(ErrorCode::ValidationError,
              "unknown scheme '" + std::string(name) + "' (expected lr1..lr8 or fourpoint)");
}

std::string scheme_name(const SchemeSpec& scheme) {
  return scheme.kind == SchemeKind::FourPoint ? "fourpoint" : "lr" + std::to_string(scheme.degree);
}

RunReport run_subdivision(const InputDocument& doc, const SchemeSpec& scheme, int levels,
                          bool want_curvature) {
  RunReport report;
  report.scheme = scheme;
  report.levels = subdivide(doc.sequence(), scheme, levels);
  report.diagnostics = convergence_diagnostics(report.levels);
  if (doc.closed) {
    report.boundary_policy = "periodic";
  } else {
    report.boundary_policy = scheme.kind == SchemeKind::FourPoint ? "repeat-ends" : "shorten";
  }
  if (want_curvature && report.levels.back().size() >= 3) {
    report.curvature = curvature_profile(report.levels.back());
  }
  return report;
}

json to_json(const HermiteSequence& H) {
  json couples = json::array();
  for (const auto& h : H.couples) {
    couples.push_back({{"p", pair_json(h.point)}, {"alpha", h.angle}});
  }
  return {{"closed", H.closed}, {"couples", couples}};
}

json to_json(const RunReport& report) {
  json scheme = {{"name", scheme_name(report.scheme)},
                 {"newton_steps", report.scheme.fit.newton_steps},
                 {"quad_nodes", report.scheme.fit.quad.nodes},
                 {"quad_panels", report.scheme.fit.quad.panels}};
  if (report.scheme.kind == SchemeKind::FourPoint) {
    scheme["kind"] = "fourpoint";
    scheme["omega"] = report.scheme.omega;
    scheme["outer"] = report.scheme.outer == FourPointOuter::ClothoidAverage ? "clothoid" : "mean";
  } else {
    scheme["kind"] = "lr";
    scheme["n"] = report.scheme.degree;
  }

  json levels = json::array();
  for (const auto& H : report.levels) levels.push_back(to_json(H));

  json diagnostics = json::array();
  for (std::size_t l = 0; l < report.diagnostics.size(); ++l) {
    const auto& d = report.diagnostics[l];
    diagnostics.push_back({{"level", l},
                           {"max_secant", d.max_secant},
                           {"max_beta_norm", d.max_beta_norm},
                           {"max_exterior_angle", d.max_exterior_angle},
                           {"max_tangent_mismatch", d.max_tangent_mismatch}});
  }

  json j = {{"format", kFormatVersion},
            {"version", report.version},
            {"scheme", scheme},
            {"boundary_policy", report.boundary_policy},
            {"levels", levels},
            {"diagnostics", diagnostics}};
  if (report.curvature) {
    j["curvature"] = {{"s", report.curvature->s}, {"kappa", report.curvature->kappa}};
  } else {
    j["curvature"] = nullptr;
  }
  return j;
}

std::string serialize_report(const RunReport& report) { return to_json(report).dump(); }

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string curvature_csv(const CurvatureProfile& profile) {
  std::ostringstream out;
  out << "s,kappa\n";
  for (std::size_t j = 0; j < profile.s.size(); ++j) {
    out << format_double(profile.s[j]) << ',' << format_double(profile.kappa[j]) << '\n';
  }
  return out.str();
}

}  // namespace clothoid
