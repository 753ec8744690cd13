#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <span>

namespace clothoid {

/// A point of the plane, read as the complex number x + iy.
using Point2 = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// A point paired with an (unwrapped) tangent angle in radians.
struct HermiteCouple {
  Point2 point{};
  double angle = 0.0;

  /// Unit normal i*exp(i*angle).
  Point2 normal() const { return Point2(0.0, 1.0) * std::polar(1.0, angle); }

  friend bool operator==(const HermiteCouple&, const HermiteCouple&) = default;
};

/// Quadratic tangent-angle function given by its values at t = 0, 1/2, 1.
struct QuadraticAngle {
  double b0 = 0.0;
  double bh = 0.0;
  double b1 = 0.0;

  double operator()(double t) const;
  /// Derivative with respect to t.
  double slope(double t) const;

  friend bool operator==(const QuadraticAngle&, const QuadraticAngle&) = default;
};

/// Composite Gauss-Legendre rule: `panels` equal subintervals, `nodes` points each.
struct QuadratureConfig {
  int nodes = 3;
  int panels = 1;

  /// Throws ValidationError unless nodes in [2, 10] and panels >= 1.
  void validate() const;

  static constexpr QuadratureConfig standard() { return {3, 1}; }
  static constexpr QuadratureConfig high_accuracy() { return {5, 16}; }

  friend bool operator==(const QuadratureConfig&, const QuadratureConfig&) = default;
};

struct GaussNode {
  double x;  // abscissa on [-1, 1]
  double w;
};

/// Tabulated Gauss-Legendre rule on [-1, 1]; n in [2, 10].
std::span<const GaussNode> gauss_legendre_rule(int n);

/// Quadratic Lagrange basis for break points 0, 1/2, 1 evaluated at t.
std::array<double, 3> lagrange_basis(double t);

double eval_angle(const QuadraticAngle& beta, double t);

/// Oriented integral of exp(i*beta(s)) over [0, t].
Point2 angle_integral(const QuadraticAngle& beta, double t, QuadratureConfig quad);

/// Full-interval integrals used by the Newton correction:
/// whole = I(beta, 1), weighted = integral of l_{1/2}(s) exp(i*beta(s)) over [0, 1].
struct AngleMoments {
  Point2 whole;
  Point2 weighted;
};
AngleMoments angle_moments(const QuadraticAngle& beta, QuadratureConfig quad);

/// Reduces an angle into (-pi, pi].
double wrap_angle(double a);

/// Returns angle + 2*pi*k closest to reference.
double rebase_angle(double angle, double reference);

struct NormalPosition {
  double beta0;
  double beta1;
  Point2 secant;
};

/// Secant-relative boundary angles of a two-point problem. Throws
/// DegenerateSecant when |p1 - p0| <= 1e-12 * (1 + |p0| + |p1|).
NormalPosition similarity_to_normal(Point2 p0, Point2 p1, double a0, double a1);

bool is_degenerate_secant(Point2 p0, Point2 p1);

}  // namespace clothoid
