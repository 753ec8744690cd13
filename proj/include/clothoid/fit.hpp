#pragma once

#include "clothoid/geometry.hpp"

namespace clothoid {

/// How boundary angle pairs outside the accurate square [-pi/2, pi/2]^2 are treated.
enum class DomainPolicy {
  Strict,      ///< reject anything outside the square
  Clamp,       ///< project onto the square and flag it
  Permissive,  ///< accept anything with Euclidean norm < pi
};

struct FitOptions {
  int newton_steps = 0;
  QuadratureConfig quad = QuadratureConfig::standard();
  DomainPolicy domain_policy = DomainPolicy::Permissive;

  /// Throws ValidationError unless 0 <= newton_steps <= 8 and quad is valid.
  void validate() const;

  /// Two Newton steps on a 16x5 composite rule; the configuration tests treat as exact.
  static FitOptions reference() {
    return {2, QuadratureConfig::high_accuracy(), DomainPolicy::Permissive};
  }
};

struct FitDiagnostics {
  double beta0 = 0.0;
  double beta1 = 0.0;
  double beta_half = 0.0;
  double defect = 0.0;  ///< arg I(beta); end tangents are off by this much
  int newton_steps_taken = 0;
  bool clamped = false;
};

struct NormalFit {
  QuadraticAngle beta;
  FitDiagnostics diagnostics;
  Point2 integral;  ///< I(beta, 1) under the fit's quadrature
};

/// An approximate clothoid p(t) = p0 + d * I(beta, t) / I(beta, 1).
struct ClothoidSegment {
  Point2 p0;
  Point2 d;
  QuadraticAngle beta;
  Point2 I1;
  QuadratureConfig quad;
  /// alpha(t) = beta(t) + angle_base - arg(I1); equals arg(d) up to a multiple of
  /// 2*pi chosen so that alpha(0) follows the branch of the start couple.
  double angle_base = 0.0;

  HermiteCouple eval(double t) const;
  Point2 point(double t) const;
  double angle(double t) const;
};

/// Cubic approximation of the midpoint tangent angle of the interpolating clothoid.
double f_tilde(double beta0, double beta1);

/// arg I(beta) in (-pi, pi]. Throws VanishingIntegral if |I(beta)| < 1e-9.
double angle_defect(const QuadraticAngle& beta, QuadratureConfig quad);

/// One Newton correction of bh towards zero angle defect.
/// Throws NewtonBreakdown when the derivative Re(J/I) is below 1e-6 in modulus.
QuadraticAngle newton_step(const QuadraticAngle& beta, QuadratureConfig quad);

NormalFit fit_normal(double beta0, double beta1, const FitOptions& opts);

struct HermiteFit {
  ClothoidSegment segment;
  FitDiagnostics diagnostics;
};

HermiteFit fit_hermite(const HermiteCouple& h0, const HermiteCouple& h1, const FitOptions& opts);

inline HermiteCouple eval_segment(const ClothoidSegment& seg, double t) { return seg.eval(t); }

}  // namespace clothoid
