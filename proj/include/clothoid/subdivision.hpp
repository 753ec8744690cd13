#pragma once

#include <cstddef>
#include <vector>

#include "clothoid/fit.hpp"
#include "clothoid/geometry.hpp"

namespace clothoid {

/// Ordered Hermite couples; closed sequences are periodic (h_j = h_{j+k}).
struct HermiteSequence {
  std::vector<HermiteCouple> couples;
  bool closed = false;

  std::size_t size() const { return couples.size(); }
  /// Number of secants: k for closed, k - 1 for open sequences.
  std::size_t secant_count() const { return closed ? couples.size() : couples.size() - 1; }
  const HermiteCouple& operator[](std::size_t j) const { return couples[j]; }
  /// Periodic access for closed sequences.
  const HermiteCouple& wrapped(std::ptrdiff_t j) const;
  Point2 secant(std::size_t j) const;

  /// Throws SequenceTooShort (< 2 couples) or DegenerateSecant (with index).
  void validate() const;

  friend bool operator==(const HermiteSequence&, const HermiteSequence&) = default;
};

enum class SchemeKind { LaneRiesenfeld, FourPoint };

/// Combination of the two extrapolated couples in the four-point rule.
enum class FourPointOuter { ClothoidAverage, ComponentwiseMean };

struct SchemeSpec {
  SchemeKind kind = SchemeKind::LaneRiesenfeld;
  int degree = 1;                ///< Lane-Riesenfeld degree n in [1, 8]
  double omega = -1.0 / 18.0;    ///< four-point tension, in [-1/4, 0)
  FourPointOuter outer = FourPointOuter::ClothoidAverage;
  FitOptions fit{};

  void validate() const;

  static SchemeSpec lane_riesenfeld(int n, FitOptions fit = {}) {
    return {SchemeKind::LaneRiesenfeld, n, -1.0 / 18.0, FourPointOuter::ClothoidAverage, fit};
  }
  static SchemeSpec four_point(double omega, FitOptions fit = {},
                               FourPointOuter outer = FourPointOuter::ClothoidAverage) {
    return {SchemeKind::FourPoint, 1, omega, outer, fit};
  }
};

/// a*h0 (+) b*h1 with a + b = 1: the fitted clothoid through h0, h1 evaluated at t = b.
/// Throws WeightSum when |a + b - 1| > 1e-12.
HermiteCouple clothoid_average(double a, const HermiteCouple& h0, double b,
                               const HermiteCouple& h1, const FitOptions& opts);

/// Midpoint insertion: h'_{2j} = h_j, h'_{2j+1} = 1/2 h_j (+) 1/2 h_{j+1}.
HermiteSequence refine_S1(const HermiteSequence& H, const FitOptions& fit);

/// h'_j = 1/2 h_j (+) 1/2 h_{j+1}. Open sequences need at least 3 couples.
HermiteSequence average_A(const HermiteSequence& H, const FitOptions& fit);

/// Lane-Riesenfeld-type scheme S_n = A^{n-1} S_1.
HermiteSequence refine_Sn(const HermiteSequence& H, int n, const FitOptions& fit);

/// Interpolatory four-point scheme. Open sequences (>= 4 couples) are padded by
/// repeating the end couples; a padded stencil pair extrapolates to the real couple.
HermiteSequence refine_four_point(const HermiteSequence& H, double omega, const FitOptions& fit,
                                  FourPointOuter outer = FourPointOuter::ClothoidAverage);

/// One application of the scheme.
HermiteSequence refine(const HermiteSequence& H, const SchemeSpec& scheme);

/// Number of couples after one round of `scheme` on a sequence of length k.
std::size_t refined_size(std::size_t k, bool closed, const SchemeSpec& scheme);

inline constexpr int kMaxLevels = 12;
inline constexpr std::size_t kMaxCouples = std::size_t{1} << 20;

/// Returns H^0, ..., H^levels. Throws ResourceLimit beyond 2^20 couples.
std::vector<HermiteSequence> subdivide(const HermiteSequence& H, const SchemeSpec& scheme,
                                       int levels);

}  // namespace clothoid
