#pragma once

#include <span>
#include <utility>
#include <vector>

#include "clothoid/fit.hpp"
#include "clothoid/subdivision.hpp"

namespace clothoid {

/// Maxima of the angle defect over a uniform grid on [-pi/2, pi/2]^2.
struct SweepReport {
  int grid_resolution = 0;
  double max_abs_defect = 0.0;
  double max_scaled_defect = 0.0;  ///< 800 * max |delta|
  /// 800 * max |delta| / (|b0 + b1| (b0^2 + b1^2)) over points where the denominator >= 1e-3.
  double max_ratio_defect = 0.0;
  std::pair<double, double> argmax_location{0.0, 0.0};  ///< where |delta| peaks
};

/// One midpoint step in normal position: length ratio r and angle-pair ratio rho.
struct ContractionRatios {
  double r = 0.0;
  double rho = 0.0;  ///< NaN when the angle pair vanishes
};

struct ContractionReport {
  double max_r = 0.0;
  double max_rho = 0.0;
  int samples = 0;
  std::pair<double, double> argmax_r{0.0, 0.0};
  std::pair<double, double> argmax_rho{0.0, 0.0};
};

struct CurvatureProfile {
  std::vector<double> s;
  std::vector<double> kappa;
};

struct LevelDiagnostics {
  double max_secant = 0.0;
  double max_beta_norm = 0.0;
  double max_exterior_angle = 0.0;
  double max_tangent_mismatch = 0.0;  ///< max |alpha_j - arg d_j|
};

inline constexpr double kContractionRadius = 3.0 * kPi / 4.0;

/// Grid value i of a resolution-point uniform grid on [-pi/2, pi/2].
double sweep_grid_value(int i, int resolution);

SweepReport defect_sweep(int resolution, QuadratureConfig quad, int newton_steps);

ContractionRatios contraction_ratios(double beta0, double beta1, const FitOptions& fit);

/// Deterministic quasi-uniform points of the disk of radius 3*pi/4: a golden-angle
/// spiral from the center out to the boundary circle.
std::vector<std::pair<double, double>> contraction_samples(int samples);

/// Throws ValidationError for fewer than 1000 samples.
ContractionReport contraction_sweep(int samples, const FitOptions& fit);

/// Signed reciprocal circumradius of consecutive point triples (positive when
/// turning counterclockwise). Open polylines copy the neighbouring value to both ends.
std::vector<double> estimate_curvature(std::span<const Point2> points, bool closed);

/// Cumulative chord length normalized so that the loop (closed) or polyline (open)
/// has length 1.
std::vector<double> chord_length_param(std::span<const Point2> points, bool closed);

std::vector<Point2> points_of(const HermiteSequence& H);

CurvatureProfile curvature_profile(const HermiteSequence& H);

LevelDiagnostics level_diagnostics(const HermiteSequence& H);
std::vector<LevelDiagnostics> convergence_diagnostics(std::span<const HermiteSequence> levels);

/// max over levels and couples of |p - m + i r exp(i alpha)| / r.
double circle_reproduction_error(std::span<const HermiteSequence> levels, Point2 center,
                                 double radius);

}  // namespace clothoid
