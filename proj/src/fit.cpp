#include "clothoid/fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clothoid/error.hpp"

namespace clothoid {

namespace {

constexpr double kMinIntegral = 1e-9;
constexpr double kMinNewtonSlope = 1e-6;

Point2 checked_integral(const QuadraticAngle& beta, QuadratureConfig quad) {
  const Point2 integral = angle_integral(beta, 1.0, quad);
  if (std::abs(integral) < kMinIntegral) {
    throw Error(ErrorCode::VanishingIntegral,
                "tangent-angle integral vanishes; the data describe a closed loop");
  }
  return integral;
}

}  // namespace

void FitOptions::validate() const {
  if (newton_steps < 0 || newton_steps > 8) {
    throw Error(ErrorCode::ValidationError,
                "newton_steps must lie in [0, 8], got " + std::to_string(newton_steps));
  }
  quad.validate();
}

double f_tilde(double beta0, double beta1) {
  return (beta0 + beta1) *
         ((beta0 * beta0 + beta1 * beta1) / 68.0 - beta0 * beta1 / 46.0 - 0.25);
}

double angle_defect(const QuadraticAngle& beta, QuadratureConfig quad) {
  return wrap_angle(std::arg(checked_integral(beta, quad)));
}

QuadraticAngle newton_step(const QuadraticAngle& beta, QuadratureConfig quad) {
  const AngleMoments m = angle_moments(beta, quad);
  if (std::abs(m.whole) < kMinIntegral) {
    throw Error(ErrorCode::VanishingIntegral,
                "tangent-angle integral vanishes; the data describe a closed loop");
  }
  // d/d(bh) arg I(beta) = Re(J / I) with J the l_{1/2}-weighted integral.
  const double slope = std::real(m.weighted / m.whole);
  if (std::abs(slope) < kMinNewtonSlope) {
    throw Error(ErrorCode::NewtonBreakdown, "Newton derivative vanishes");
  }
  QuadraticAngle next = beta;
  next.bh = beta.bh - std::arg(m.whole) / slope;
  return next;
}

NormalFit fit_normal(double beta0, double beta1, const FitOptions& opts) {
  FitDiagnostics diag;
  switch (opts.domain_policy) {
    case DomainPolicy::Strict:
      if (std::abs(beta0) > kPi / 2 || std::abs(beta1) > kPi / 2) {
        throw Error(ErrorCode::DomainViolation,
                    "boundary angles outside [-pi/2, pi/2]^2 under strict policy");
      }
      break;
    case DomainPolicy::Clamp: {
      const double c0 = std::clamp(beta0, -kPi / 2, kPi / 2);
      const double c1 = std::clamp(beta1, -kPi / 2, kPi / 2);
      diag.clamped = c0 != beta0 || c1 != beta1;
      beta0 = c0;
      beta1 = c1;
      break;
    }
    case DomainPolicy::Permissive:
      if (!(std::hypot(beta0, beta1) < kPi)) {
        throw Error(ErrorCode::DomainViolation, "boundary angle pair has norm >= pi");
      }
      break;
  }

  QuadraticAngle beta{beta0, f_tilde(beta0, beta1), beta1};
  for (int step = 0; step < opts.newton_steps; ++step) {
    beta = newton_step(beta, opts.quad);
  }
  const Point2 integral = checked_integral(beta, opts.quad);

  diag.beta0 = beta0;
  diag.beta1 = beta1;
  diag.beta_half = beta.bh;
  diag.defect = wrap_angle(std::arg(integral));
  diag.newton_steps_taken = opts.newton_steps;
  return {beta, diag, integral};
}

HermiteFit fit_hermite(const HermiteCouple& h0, const HermiteCouple& h1, const FitOptions& opts) {
  const NormalPosition np = similarity_to_normal(h0.point, h1.point, h0.angle, h1.angle);
  NormalFit fit = fit_normal(np.beta0, np.beta1, opts);
  ClothoidSegment seg{h0.point, np.secant, fit.beta, fit.integral, opts.quad,
                      h0.angle - np.beta0};
  return {seg, fit.diagnostics};
}

Point2 ClothoidSegment::point(double t) const {
  return p0 + d * (angle_integral(beta, t, quad) / I1);
}

double ClothoidSegment::angle(double t) const {
  return beta(t) + angle_base - std::arg(I1);
}

HermiteCouple ClothoidSegment::eval(double t) const { return {point(t), angle(t)}; }

}  // namespace clothoid
