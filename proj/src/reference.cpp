#include "clothoid/reference.hpp"

#include <cmath>

#include "clothoid/detail/rules.hpp"
#include "clothoid/error.hpp"

namespace clothoid::reference {

HermiteSequence refine_S1(const HermiteSequence& H, const FitOptions& fit) {
  if (H.size() < 2) throw Error(ErrorCode::SequenceTooShort, "S1 needs at least 2 couples");
  HermiteSequence out{{}, H.closed};
  for (std::size_t j = 0; j < H.size(); ++j) {
    out.couples.push_back(H[j]);
    if (j < H.secant_count()) {
      const HermiteCouple& next = H.couples[(j + 1) % H.size()];
      try {
        out.couples.push_back(clothoid_average(0.5, H[j], 0.5, next, fit));
      } catch (const Error& e) {
        throw e.with_index(j);
      }
    }
  }
  return out;
}

HermiteSequence average_A(const HermiteSequence& H, const FitOptions& fit) {
  if (H.size() < (H.closed ? 2u : 3u)) {
    throw Error(ErrorCode::SequenceTooShort, "averaging would leave fewer than 2 couples");
  }
  HermiteSequence out{{}, H.closed};
  for (std::size_t j = 0; j < H.secant_count(); ++j) {
    const HermiteCouple& next = H.couples[(j + 1) % H.size()];
    try {
      out.couples.push_back(clothoid_average(0.5, H[j], 0.5, next, fit));
    } catch (const Error& e) {
      throw e.with_index(j);
    }
  }
  return out;
}

HermiteSequence refine_Sn(const HermiteSequence& H, int n, const FitOptions& fit) {
  if (n < 1) throw Error(ErrorCode::ValidationError, "Lane-Riesenfeld degree must be >= 1");
  HermiteSequence out = reference::refine_S1(H, fit);
  for (int round = 1; round < n; ++round) out = reference::average_A(out, fit);
  return out;
}

HermiteSequence refine_four_point(const HermiteSequence& H, double omega, const FitOptions& fit,
                                  FourPointOuter outer) {
  detail::check_four_point_omega(omega);
  const std::size_t k = H.size();
  if (k < (H.closed ? 3u : 4u)) {
    throw Error(ErrorCode::SequenceTooShort, "four-point refinement needs more couples");
  }
  // Open data: extend by one repeated couple at each end.
  std::vector<HermiteCouple> ext;
  ext.reserve(k + 3);
  ext.push_back(H.closed ? H.couples[k - 1] : H.couples[0]);
  ext.insert(ext.end(), H.couples.begin(), H.couples.end());
  if (H.closed) {
    ext.push_back(H.couples[0]);
    ext.push_back(H.couples[1 % k]);
  } else {
    ext.push_back(H.couples[k - 1]);
  }

  HermiteSequence out{{}, H.closed};
  for (std::size_t j = 0; j < k; ++j) {
    out.couples.push_back(H[j]);
    if (j >= H.secant_count()) break;
    const bool pad_left = !H.closed && j == 0;
    const bool pad_right = !H.closed && j + 2 == k;
    try {
      out.couples.push_back(detail::four_point_insert(ext[j], ext[j + 1], ext[j + 2], ext[j + 3],
                                                      pad_left, pad_right, omega, fit, outer));
    } catch (const Error& e) {
      throw e.with_index(j);
    }
  }
  return out;
}

std::vector<HermiteSequence> subdivide(const HermiteSequence& H, const SchemeSpec& scheme,
                                       int levels) {
  scheme.validate();
  H.validate();
  std::vector<HermiteSequence> out{H};
  for (int level = 1; level <= levels; ++level) {
    const HermiteSequence& prev = out.back();
    out.push_back(scheme.kind == SchemeKind::LaneRiesenfeld
                      ? reference::refine_Sn(prev, scheme.degree, scheme.fit)
                      : reference::refine_four_point(prev, scheme.omega, scheme.fit, scheme.outer));
  }
  return out;
}

SweepReport defect_sweep(int resolution, QuadratureConfig quad, int newton_steps) {
  SweepReport report;
  report.grid_resolution = resolution;
  for (int i = 0; i < resolution; ++i) {
    const double b0 = sweep_grid_value(i, resolution);
    for (int j = 0; j < resolution; ++j) {
      const double b1 = sweep_grid_value(j, resolution);
      QuadraticAngle beta{b0, f_tilde(b0, b1), b1};
      for (int s = 0; s < newton_steps; ++s) beta = newton_step(beta, quad);
      const double d = std::abs(angle_defect(beta, quad));
      if (d > report.max_abs_defect) {
        report.max_abs_defect = d;
        report.argmax_location = {b0, b1};
      }
      const double denom = std::abs(b0 + b1) * (b0 * b0 + b1 * b1);
      if (denom >= 1e-3 && 800.0 * d / denom > report.max_ratio_defect) {
        report.max_ratio_defect = 800.0 * d / denom;
      }
    }
  }
  report.max_scaled_defect = 800.0 * report.max_abs_defect;
  return report;
}

ContractionReport contraction_sweep(int samples, const FitOptions& fit) {
  ContractionReport report;
  report.samples = samples;
  for (const auto& [b0, b1] : contraction_samples(samples)) {
    const ContractionRatios c = contraction_ratios(b0, b1, fit);
    if (c.r > report.max_r) {
      report.max_r = c.r;
      report.argmax_r = {b0, b1};
    }
    if (!std::isnan(c.rho) && c.rho > report.max_rho) {
      report.max_rho = c.rho;
      report.argmax_rho = {b0, b1};
    }
  }
  return report;
}

}  // namespace clothoid::reference
