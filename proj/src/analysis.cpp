#include "clothoid/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "clothoid/detail/parallel.hpp"
#include "clothoid/error.hpp"

namespace clothoid {

namespace {

constexpr double kRatioCutoff = 1e-3;
constexpr double kRhoExclusion = 1e-6;

double cross(Point2 u, Point2 v) { return u.real() * v.imag() - u.imag() * v.real(); }

}  // namespace

double sweep_grid_value(int i, int resolution) {
  return -kPi / 2 + kPi * static_cast<double>(i) / static_cast<double>(resolution - 1);
}

SweepReport defect_sweep(int resolution, QuadratureConfig quad, int newton_steps) {
  if (newton_steps < 0 || newton_steps > 8) {
    throw Error(ErrorCode::ValidationError, "newton_steps must lie in [0, 8]");
  }
  if (resolution < 3) throw Error(ErrorCode::ValidationError, "sweep resolution must be >= 3");
  quad.validate();
  const std::size_t n = static_cast<std::size_t>(resolution);
  std::vector<double> defect(n * n);

  detail::parallel_for_indices(n * n, [&](std::size_t k) {
    const double b0 = sweep_grid_value(static_cast<int>(k / n), resolution);
    const double b1 = sweep_grid_value(static_cast<int>(k % n), resolution);
    QuadraticAngle beta{b0, f_tilde(b0, b1), b1};
    for (int s = 0; s < newton_steps; ++s) beta = newton_step(beta, quad);
    defect[k] = std::abs(angle_defect(beta, quad));
  });

  // Sequential reduction keeps the argmax tie-break (first grid index) fixed.
  SweepReport report;
  report.grid_resolution = resolution;
  for (std::size_t i = 0; i < n; ++i) {
    const double b0 = sweep_grid_value(static_cast<int>(i), resolution);
    for (std::size_t j = 0; j < n; ++j) {
      const double b1 = sweep_grid_value(static_cast<int>(j), resolution);
      const double d = defect[i * n + j];
      if (d > report.max_abs_defect) {
        report.max_abs_defect = d;
        report.argmax_location = {b0, b1};
      }
      const double denom = std::abs(b0 + b1) * (b0 * b0 + b1 * b1);
      if (denom >= kRatioCutoff) {
        report.max_ratio_defect = std::max(report.max_ratio_defect, 800.0 * d / denom);
      }
    }
  }
  report.max_scaled_defect = 800.0 * report.max_abs_defect;
  return report;
}

ContractionRatios contraction_ratios(double beta0, double beta1, const FitOptions& fit) {
  const HermiteCouple h0{Point2(0.0, 0.0), beta0};
  const HermiteCouple h1{Point2(1.0, 0.0), beta1};
  const HermiteCouple mid = clothoid_average(0.5, h0, 0.5, h1, fit);

  const Point2 d0 = mid.point;
  const Point2 d1 = Point2(1.0, 0.0) - mid.point;
  ContractionRatios out;
  out.r = std::max(std::abs(d0), std::abs(d1));

  const double norm = std::hypot(beta0, beta1);
  if (norm < kRhoExclusion) {
    out.rho = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const double phi0 = std::arg(d0);
  const double phi1 = std::arg(d1);
  const double left = std::hypot(wrap_angle(beta0 - phi0), wrap_angle(mid.angle - phi0));
  const double right = std::hypot(wrap_angle(mid.angle - phi1), wrap_angle(beta1 - phi1));
  out.rho = std::max(left, right) / norm;
  return out;
}

std::vector<std::pair<double, double>> contraction_samples(int samples) {
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  std::vector<std::pair<double, double>> out(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double radius =
        kContractionRadius * std::sqrt(static_cast<double>(i) / static_cast<double>(samples - 1));
    const double theta = golden * static_cast<double>(i);
    out[static_cast<std::size_t>(i)] = {radius * std::cos(theta), radius * std::sin(theta)};
  }
  return out;
}

ContractionReport contraction_sweep(int samples, const FitOptions& fit) {
  if (samples < 1000) {
    throw Error(ErrorCode::ValidationError, "contraction sweep needs at least 1000 samples");
  }
  fit.validate();
  const auto points = contraction_samples(samples);
  std::vector<ContractionRatios> ratios(points.size());

  detail::parallel_for_indices(points.size(), [&](std::size_t i) {
    ratios[i] = contraction_ratios(points[i].first, points[i].second, fit);
  });

  ContractionReport report;
  report.samples = samples;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (ratios[i].r > report.max_r) {
      report.max_r = ratios[i].r;
      report.argmax_r = points[i];
    }
    if (!std::isnan(ratios[i].rho) && ratios[i].rho > report.max_rho) {
      report.max_rho = ratios[i].rho;
      report.argmax_rho = points[i];
    }
  }
  return report;
}

std::vector<double> estimate_curvature(std::span<const Point2> points, bool closed) {
  const std::size_t n = points.size();
  if (n < 3) throw Error(ErrorCode::ValidationError, "curvature needs at least 3 points");

  auto kappa_at = [&](std::size_t j) {
    const Point2 a = points[(j + n - 1) % n];
    const Point2 b = points[j];
    const Point2 c = points[(j + 1) % n];
    if (is_degenerate_secant(a, b) || is_degenerate_secant(b, c) || is_degenerate_secant(a, c)) {
      throw Error(ErrorCode::DegenerateTriple,
                  "points around index " + std::to_string(j) + " coincide", j);
    }
    const Point2 u = b - a;
    const Point2 v = c - b;
    return 2.0 * cross(u, v) / (std::abs(u) * std::abs(v) * std::abs(c - a));
  };

  std::vector<double> kappa(n);
  if (closed) {
    for (std::size_t j = 0; j < n; ++j) kappa[j] = kappa_at(j);
  } else {
    for (std::size_t j = 1; j + 1 < n; ++j) kappa[j] = kappa_at(j);
    kappa[0] = kappa[1];
    kappa[n - 1] = kappa[n - 2];
  }
  return kappa;
}

std::vector<double> chord_length_param(std::span<const Point2> points, bool closed) {
  const std::size_t n = points.size();
  if (n < 2) throw Error(ErrorCode::ValidationError, "chord length needs at least 2 points");

  std::vector<double> s(n, 0.0);
  for (std::size_t j = 1; j < n; ++j) s[j] = s[j - 1] + std::abs(points[j] - points[j - 1]);
  const double total = closed ? s[n - 1] + std::abs(points[0] - points[n - 1]) : s[n - 1];
  if (!(total > 0.0)) throw Error(ErrorCode::ValidationError, "polyline has zero length");

  const double sigma = 1.0 / total;
  for (double& v : s) v *= sigma;
  if (!closed) s[n - 1] = 1.0;
  return s;
}

std::vector<Point2> points_of(const HermiteSequence& H) {
  std::vector<Point2> out;
  out.reserve(H.size());
  for (const auto& h : H.couples) out.push_back(h.point);
  return out;
}

CurvatureProfile curvature_profile(const HermiteSequence& H) {
  const auto pts = points_of(H);
  return {chord_length_param(pts, H.closed), estimate_curvature(pts, H.closed)};
}

LevelDiagnostics level_diagnostics(const HermiteSequence& H) {
  LevelDiagnostics diag;
  const std::size_t m = H.secant_count();
  for (std::size_t j = 0; j < m; ++j) {
    const Point2 d = H.secant(j);
    const double phi = std::arg(d);
    const double b0 = wrap_angle(H[j].angle - phi);
    const double b1 = wrap_angle(H.wrapped(static_cast<std::ptrdiff_t>(j) + 1).angle - phi);
    diag.max_secant = std::max(diag.max_secant, std::abs(d));
    diag.max_beta_norm = std::max(diag.max_beta_norm, std::hypot(b0, b1));
    diag.max_tangent_mismatch = std::max(diag.max_tangent_mismatch, std::abs(b0));
    if (j > 0 || H.closed) {
      const Point2 prev = H.secant(j > 0 ? j - 1 : m - 1);
      diag.max_exterior_angle =
          std::max(diag.max_exterior_angle, std::abs(wrap_angle(phi - std::arg(prev))));
    }
  }
  return diag;
}

std::vector<LevelDiagnostics> convergence_diagnostics(std::span<const HermiteSequence> levels) {
  std::vector<LevelDiagnostics> out;
  out.reserve(levels.size());
  for (const auto& H : levels) out.push_back(level_diagnostics(H));
  return out;
}

double circle_reproduction_error(std::span<const HermiteSequence> levels, Point2 center,
                                 double radius) {
  const Point2 i_r(0.0, radius);
  double worst = 0.0;
  for (const auto& H : levels) {
    for (const auto& h : H.couples) {
      worst = std::max(worst, std::abs(h.point - center + i_r * std::polar(1.0, h.angle)));
    }
  }
  return worst / radius;
}

}  // namespace clothoid
