#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "clothoid/analysis.hpp"
#include "clothoid/geometry.hpp"
#include "clothoid/subdivision.hpp"

namespace testsupport {

using clothoid::HermiteCouple;
using clothoid::HermiteSequence;
using clothoid::kPi;
using clothoid::Point2;

// Counterclockwise samples p_j = m + r exp(i theta_j), tangent theta_j + pi/2.
inline HermiteSequence circle_sequence(std::size_t k, Point2 center = {0.0, 0.0},
                                       double radius = 1.0, double phase = 0.0,
                                       bool closed = true) {
  HermiteSequence H;
  H.closed = closed;
  const double step = closed ? 2.0 * kPi / static_cast<double>(k) : kPi / static_cast<double>(k);
  for (std::size_t j = 0; j < k; ++j) {
    const double theta = phase + step * static_cast<double>(j);
    H.couples.push_back({center + std::polar(radius, theta), theta + kPi / 2});
  }
  return H;
}

inline HermiteSequence line_sequence(std::size_t k, Point2 start = {0.0, 0.0},
                                     Point2 step = {1.0, 0.0}) {
  HermiteSequence H;
  for (std::size_t j = 0; j < k; ++j) {
    H.couples.push_back({start + static_cast<double>(j) * step, std::arg(step)});
  }
  return H;
}

// z -> a z + b with a = s exp(i theta).
struct Similarity {
  Point2 a{1.0, 0.0};
  Point2 b{0.0, 0.0};

  Point2 operator()(Point2 z) const { return a * z + b; }
  HermiteCouple operator()(const HermiteCouple& h) const {
    return {a * h.point + b, h.angle + std::arg(a)};
  }
  HermiteSequence operator()(const HermiteSequence& H) const {
    HermiteSequence out{{}, H.closed};
    for (const auto& h : H.couples) out.couples.push_back((*this)(h));
    return out;
  }
  double scale() const { return std::abs(a); }
};

inline Similarity random_similarity(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> log_scale(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> shift(-50.0, 50.0);
  return {std::polar(std::exp(log_scale(rng)), angle(rng)), {shift(rng), shift(rng)}};
}

// Angle difference modulo 2 pi, in (-pi, pi].
inline double angle_gap(double a, double b) { return clothoid::wrap_angle(a - b); }

inline double max_beta_norm(const HermiteSequence& H) {
  return clothoid::level_diagnostics(H).max_beta_norm;
}

// Closed polygon near a perturbed circle with noisy tangents, redrawn until all
// secant angle pairs lie in the disk of radius 3 pi / 4.
inline HermiteSequence random_admissible_closed(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(5, 11);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (;;) {
    const auto k = static_cast<std::size_t>(count(rng));
    HermiteSequence H;
    H.closed = true;
    const double step = 2.0 * kPi / static_cast<double>(k);
    for (std::size_t j = 0; j < k; ++j) {
      const double theta = step * (static_cast<double>(j) + 0.3 * unit(rng));
      const double radius = 1.0 + 0.3 * unit(rng);
      H.couples.push_back({std::polar(radius, theta), theta + kPi / 2 + 0.6 * unit(rng)});
    }
    if (max_beta_norm(H) < clothoid::kContractionRadius) return H;
  }
}

}  // namespace testsupport
