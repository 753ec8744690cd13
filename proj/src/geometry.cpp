#include "clothoid/geometry.hpp"

#include <cmath>

#include "clothoid/error.hpp"

namespace clothoid {

namespace {

// Gauss-Legendre abscissae and weights on [-1, 1] for n = 2..10, ascending.
constexpr GaussNode kGaussTable[] = {
    // n = 2
    {-5.77350269189625764509148780501957456e-1, 1.0},
    {5.77350269189625764509148780501957456e-1, 1.0},
    // n = 3
    {-7.74596669241483377035853079956479922e-1, 5.55555555555555555555555555555555556e-1},
    {0.0, 8.88888888888888888888888888888888889e-1},
    {7.74596669241483377035853079956479922e-1, 5.55555555555555555555555555555555556e-1},
    // n = 4
    {-8.61136311594052575223946488892809505e-1, 3.47854845137453857373063949221999407e-1},
    {-3.39981043584856264802665759103244687e-1, 6.52145154862546142626936050778000593e-1},
    {3.39981043584856264802665759103244687e-1, 6.52145154862546142626936050778000593e-1},
    {8.61136311594052575223946488892809505e-1, 3.47854845137453857373063949221999407e-1},
    // n = 5
    {-9.06179845938663992797626878299392965e-1, 2.36926885056189087514264040719917363e-1},
    {-5.38469310105683091036314420700208805e-1, 4.78628670499366468041291514835638193e-1},
    {0.0, 5.68888888888888888888888888888888889e-1},
    {5.38469310105683091036314420700208805e-1, 4.78628670499366468041291514835638193e-1},
    {9.06179845938663992797626878299392965e-1, 2.36926885056189087514264040719917363e-1},
    // n = 6
    {-9.32469514203152027812301554493994609e-1, 1.71324492379170345040296142172732894e-1},
    {-6.61209386466264513661399595019905347e-1, 3.60761573048138607569833513837716112e-1},
    {-2.38619186083196908630501721680711935e-1, 4.67913934572691047389870343989550995e-1},
    {2.38619186083196908630501721680711935e-1, 4.67913934572691047389870343989550995e-1},
    {6.61209386466264513661399595019905347e-1, 3.60761573048138607569833513837716112e-1},
    {9.32469514203152027812301554493994609e-1, 1.71324492379170345040296142172732894e-1},
    // n = 7
    {-9.49107912342758524526189684047851262e-1, 1.29484966168869693270611432679082018e-1},
    {-7.41531185599394439863864773280788407e-1, 2.79705391489276667901467771423779582e-1},
    {-4.05845151377397166906606412076961463e-1, 3.81830050505118944950369775488975134e-1},
    {0.0, 4.17959183673469387755102040816326531e-1},
    {4.05845151377397166906606412076961463e-1, 3.81830050505118944950369775488975134e-1},
    {7.41531185599394439863864773280788407e-1, 2.79705391489276667901467771423779582e-1},
    {9.49107912342758524526189684047851262e-1, 1.29484966168869693270611432679082018e-1},
    // n = 8
    {-9.6028985649753623168356086856947299e-1, 1.0122853629037625915253135430996219e-1},
    {-7.96666477413626739591553936475830437e-1, 2.22381034453374470544355994426240884e-1},
    {-5.25532409916328985817739049189246349e-1, 3.13706645877887287337962201986601313e-1},
    {-1.83434642495649804939476142360183981e-1, 3.62683783378361982965150449277195612e-1},
    {1.83434642495649804939476142360183981e-1, 3.62683783378361982965150449277195612e-1},
    {5.25532409916328985817739049189246349e-1, 3.13706645877887287337962201986601313e-1},
    {7.96666477413626739591553936475830437e-1, 2.22381034453374470544355994426240884e-1},
    {9.6028985649753623168356086856947299e-1, 1.0122853629037625915253135430996219e-1},
    // n = 9
    {-9.6816023950762608983557620290367287e-1, 8.12743883615744119718921581105236507e-2},
    {-8.36031107326635794299429788069734877e-1, 1.8064816069485740405847203124291281e-1},
    {-6.13371432700590397308702039341474185e-1, 2.6061069640293546231874286941863285e-1},
    {-3.24253423403808929038538014643336609e-1, 3.12347077040002840068630406584443666e-1},
    {0.0, 3.30239355001259763164525069286974049e-1},
    {3.24253423403808929038538014643336609e-1, 3.12347077040002840068630406584443666e-1},
    {6.13371432700590397308702039341474185e-1, 2.6061069640293546231874286941863285e-1},
    {8.36031107326635794299429788069734877e-1, 1.8064816069485740405847203124291281e-1},
    {9.6816023950762608983557620290367287e-1, 8.12743883615744119718921581105236507e-2},
    // n = 10
    {-9.73906528517171720077964012084452053e-1, 6.66713443086881375935688098933317929e-2},
    {-8.65063366688984510732096688423493049e-1, 1.49451349150580593145776339657697332e-1},
    {-6.79409568299024406234327365114873576e-1, 2.19086362515982043995534934228163192e-1},
    {-4.33395394129247190799265943165784162e-1, 2.69266719309996355091226921569469353e-1},
    {-1.48874338981631210884826001129719985e-1, 2.95524224714752870173892994651338329e-1},
    {1.48874338981631210884826001129719985e-1, 2.95524224714752870173892994651338329e-1},
    {4.33395394129247190799265943165784162e-1, 2.69266719309996355091226921569469353e-1},
    {6.79409568299024406234327365114873576e-1, 2.19086362515982043995534934228163192e-1},
    {8.65063366688984510732096688423493049e-1, 1.49451349150580593145776339657697332e-1},
    {9.73906528517171720077964012084452053e-1, 6.66713443086881375935688098933317929e-2},
};

// Offset of rule n in kGaussTable: sum of 2..n-1.
constexpr int table_offset(int n) { return (n - 1) * n / 2 - 1; }

static_assert(sizeof(kGaussTable) / sizeof(GaussNode) == table_offset(11));

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateSecant: return "DegenerateSecant";
    case ErrorCode::VanishingIntegral: return "VanishingIntegral";
    case ErrorCode::NewtonBreakdown: return "NewtonBreakdown";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::WeightSum: return "WeightSum";
    case ErrorCode::SequenceTooShort: return "SequenceTooShort";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

double QuadraticAngle::operator()(double t) const { return eval_angle(*this, t); }

double QuadraticAngle::slope(double t) const {
  return b0 * (4.0 * t - 3.0) + bh * (4.0 - 8.0 * t) + b1 * (4.0 * t - 1.0);
}

void QuadratureConfig::validate() const {
  if (nodes < 2 || nodes > 10) {
    throw Error(ErrorCode::ValidationError,
                "quadrature nodes must lie in [2, 10], got " + std::to_string(nodes));
  }
  if (panels < 1) {
    throw Error(ErrorCode::ValidationError,
                "quadrature panels must be >= 1, got " + std::to_string(panels));
  }
}

std::span<const GaussNode> gauss_legendre_rule(int n) {
  if (n < 2 || n > 10) {
    throw Error(ErrorCode::ValidationError, "Gauss-Legendre rule available for n in [2, 10]");
  }
  return {kGaussTable + table_offset(n), static_cast<std::size_t>(n)};
}

std::array<double, 3> lagrange_basis(double t) {
  return {(t - 1.0) * (2.0 * t - 1.0), 4.0 * t * (1.0 - t), t * (2.0 * t - 1.0)};
}

double eval_angle(const QuadraticAngle& beta, double t) {
  const auto [l0, lh, l1] = lagrange_basis(t);
  return beta.b0 * l0 + beta.bh * lh + beta.b1 * l1;
}

Point2 angle_integral(const QuadraticAngle& beta, double t, QuadratureConfig quad) {
  const auto rule = gauss_legendre_rule(quad.nodes);
  const double h = t / quad.panels;
  Point2 sum{};
  for (int k = 0; k < quad.panels; ++k) {
    const double a = k * h;
    Point2 panel{};
    for (const auto& node : rule) {
      const double s = a + 0.5 * h * (node.x + 1.0);
      panel += node.w * std::polar(1.0, beta(s));
    }
    sum += panel;
  }
  return 0.5 * h * sum;
}

AngleMoments angle_moments(const QuadraticAngle& beta, QuadratureConfig quad) {
  const auto rule = gauss_legendre_rule(quad.nodes);
  const double h = 1.0 / quad.panels;
  Point2 whole{};
  Point2 weighted{};
  for (int k = 0; k < quad.panels; ++k) {
    const double a = k * h;
    for (const auto& node : rule) {
      const double s = a + 0.5 * h * (node.x + 1.0);
      const Point2 e = node.w * std::polar(1.0, beta(s));
      whole += e;
      weighted += (4.0 * s * (1.0 - s)) * e;
    }
  }
  return {0.5 * h * whole, 0.5 * h * weighted};
}

double wrap_angle(double a) {
  const double r = std::remainder(a, 2.0 * kPi);
  return r <= -kPi ? r + 2.0 * kPi : r;
}

double rebase_angle(double angle, double reference) {
  return angle - 2.0 * kPi * std::round((angle - reference) / (2.0 * kPi));
}

bool is_degenerate_secant(Point2 p0, Point2 p1) {
  return std::abs(p1 - p0) <= 1e-12 * (1.0 + std::abs(p0) + std::abs(p1));
}

NormalPosition similarity_to_normal(Point2 p0, Point2 p1, double a0, double a1) {
  if (is_degenerate_secant(p0, p1)) {
    throw Error(ErrorCode::DegenerateSecant, "secant between consecutive points vanishes");
  }
  const Point2 d = p1 - p0;
  const double phi = wrap_angle(std::arg(d));
  return {wrap_angle(a0 - phi), wrap_angle(a1 - phi), d};
}

}  // namespace clothoid
