#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "clothoid/analysis.hpp"
#include "clothoid/subdivision.hpp"

namespace clothoid {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr int kFormatVersion = 1;

/// Optional scheme settings carried by an input file; command-line flags win.
struct SchemeDefaults {
  std::optional<std::string> scheme;  ///< "lr<n>" or "fourpoint"
  std::optional<double> omega;
  std::optional<int> levels;
  std::optional<int> newton_steps;

  friend bool operator==(const SchemeDefaults&, const SchemeDefaults&) = default;
};

struct InputDocument {
  bool closed = false;
  std::vector<HermiteCouple> couples;
  std::optional<SchemeDefaults> scheme;

  HermiteSequence sequence() const { return {couples, closed}; }

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

struct ParseOptions {
  /// Reject coincident consecutive points as ValidationError. The service turns
  /// this off and lets the fit report DegenerateSecant with the offending index.
  bool reject_coincident_points = true;
};

/// Parses a UTF-8 JSON input document. Throws ParseError (syntax, with line and
/// column) or ValidationError (field path in the message, couple index attached).
InputDocument parse_input(std::string_view text, ParseOptions options = {});
InputDocument input_from_json(const nlohmann::json& j, ParseOptions options = {});

nlohmann::json to_json(const InputDocument& doc);
/// Canonical serialization: `format`, `closed`, couples with `alpha` only.
std::string serialize_input(const InputDocument& doc);

/// Tangent angle for a normal n = i*exp(i*alpha).
double angle_from_normal(Point2 normal);

/// "lr<n>" (n in 1..8) or "fourpoint". Throws ValidationError otherwise.
SchemeSpec parse_scheme_name(std::string_view name);
std::string scheme_name(const SchemeSpec& scheme);

struct RunReport {
  std::string version{kVersion};
  SchemeSpec scheme;
  std::vector<HermiteSequence> levels;
  std::optional<CurvatureProfile> curvature;  ///< of the final level
  std::vector<LevelDiagnostics> diagnostics;
  /// "periodic", "shorten" (open Lane-Riesenfeld) or "repeat-ends" (open four-point).
  std::string boundary_policy;
};

RunReport run_subdivision(const InputDocument& doc, const SchemeSpec& scheme, int levels,
                          bool want_curvature = true);

nlohmann::json to_json(const HermiteSequence& H);
nlohmann::json to_json(const RunReport& report);
std::string serialize_report(const RunReport& report);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

/// "s,kappa" header followed by one row per final-level couple.
std::string curvature_csv(const CurvatureProfile& profile);

}  // namespace clothoid
