#pragma once

#include <span>
#include <string>
#include <vector>

#include "clothoid/io.hpp"

namespace clothoid {

struct SvgOptions {
  bool show_normals = true;
  bool show_comb = true;
  bool show_chart = true;
  /// Comb length per unit curvature in model units; <= 0 picks 15% of the
  /// bounding-box diagonal for the largest |kappa|.
  double comb_scale = 0.0;
};

/// Tips of the curvature comb: each point moved against its discrete left
/// normal by scale * kappa, so the comb sits outside convex arcs.
std::vector<Point2> curvature_comb(std::span<const Point2> points, std::span<const double> kappa,
                                   bool closed, double scale);

/// SVG 1.1 document: final polyline, initial couples with normals, optional comb
/// and a kappa-versus-chord-length chart.
std::string render_svg(const RunReport& report, const SvgOptions& options = {});

}  // namespace clothoid
