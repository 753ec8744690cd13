#include "clothoid/subdivision.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "clothoid/detail/parallel.hpp"
#include "clothoid/detail/rules.hpp"
#include "clothoid/error.hpp"

namespace clothoid {

namespace detail {

void check_four_point_omega(double omega) {
  if (!(omega < 0.0 && omega >= -0.25)) {
    throw Error(ErrorCode::ValidationError,
                "four-point tension omega must lie in [-1/4, 0), got " + std::to_string(omega));
  }
}

HermiteCouple four_point_insert(const HermiteCouple& hm1, const HermiteCouple& h0,
                                const HermiteCouple& h1, const HermiteCouple& h2, bool pad_left,
                                bool pad_right, double omega, const FitOptions& fit,
                                FourPointOuter outer) {
  // Bring the stencil onto one angle branch; matters across the seam of closed data.
  const HermiteCouple left{hm1.point, rebase_angle(hm1.angle, h0.angle)};
  const HermiteCouple right{h1.point, rebase_angle(h1.angle, h0.angle)};
  const HermiteCouple far{h2.point, rebase_angle(h2.angle, right.angle)};

  // omega*h_{j-1} (+) (1-omega)*h_j lies past h_j; (1-omega)*h_{j+1} (+) omega*h_{j+2}
  // lies before h_{j+1}.
  const HermiteCouple e_minus =
      pad_left ? h0 : clothoid_average(omega, left, 1.0 - omega, h0, fit);
  const HermiteCouple e_plus =
      pad_right ? right : clothoid_average(1.0 - omega, right, omega, far, fit);

  if (outer == FourPointOuter::ComponentwiseMean) {
    return {0.5 * (e_minus.point + e_plus.point),
            0.5 * (e_minus.angle + rebase_angle(e_plus.angle, e_minus.angle))};
  }
  return clothoid_average(0.5, e_minus, 0.5, e_plus, fit);
}

}  // namespace detail

const HermiteCouple& HermiteSequence::wrapped(std::ptrdiff_t j) const {
  const auto k = static_cast<std::ptrdiff_t>(couples.size());
  return couples[static_cast<std::size_t>(((j % k) + k) % k)];
}

Point2 HermiteSequence::secant(std::size_t j) const {
  return wrapped(static_cast<std::ptrdiff_t>(j) + 1).point - couples[j].point;
}

void HermiteSequence::validate() const {
  if (couples.size() < 2) {
    throw Error(ErrorCode::SequenceTooShort, "a Hermite sequence needs at least 2 couples");
  }
  for (std::size_t j = 0; j < secant_count(); ++j) {
    if (is_degenerate_secant(couples[j].point, wrapped(static_cast<std::ptrdiff_t>(j) + 1).point)) {
      throw Error(ErrorCode::DegenerateSecant,
                  "couples " + std::to_string(j) + " and " +
                      std::to_string((j + 1) % couples.size()) + " coincide",
                  j);
    }
  }
}

void SchemeSpec::validate() const {
  fit.validate();
  if (kind == SchemeKind::LaneRiesenfeld) {
    if (degree < 1 || degree > 8) {
      throw Error(ErrorCode::ValidationError,
                  "Lane-Riesenfeld degree must lie in [1, 8], got " + std::to_string(degree));
    }
  } else {
    detail::check_four_point_omega(omega);
  }
}

HermiteCouple clothoid_average(double a, const HermiteCouple& h0, double b,
                               const HermiteCouple& h1, const FitOptions& opts) {
  if (std::abs(a + b - 1.0) > 1e-12) {
    throw Error(ErrorCode::WeightSum, "clothoid average weights must sum to 1");
  }
  return fit_hermite(h0, h1, opts).segment.eval(b);
}

HermiteSequence refine_S1(const HermiteSequence& H, const FitOptions& fit) {
  if (H.size() < 2) throw Error(ErrorCode::SequenceTooShort, "S1 needs at least 2 couples");
  const std::size_t k = H.size();
  const std::size_t segments = H.secant_count();
  HermiteSequence out{std::vector<HermiteCouple>(H.closed ? 2 * k : 2 * k - 1), H.closed};

  detail::parallel_for_indices(k, [&](std::size_t j) {
    out.couples[2 * j] = H[j];
    if (j < segments) {
      out.couples[2 * j + 1] =
          clothoid_average(0.5, H[j], 0.5, H.wrapped(static_cast<std::ptrdiff_t>(j) + 1), fit);
    }
  });
  return out;
}

HermiteSequence average_A(const HermiteSequence& H, const FitOptions& fit) {
  if (H.size() < (H.closed ? 2u : 3u)) {
    throw Error(ErrorCode::SequenceTooShort, "averaging would leave fewer than 2 couples");
  }
  const std::size_t n = H.secant_count();
  HermiteSequence out{std::vector<HermiteCouple>(n), H.closed};
  detail::parallel_for_indices(n, [&](std::size_t j) {
    out.couples[j] =
        clothoid_average(0.5, H[j], 0.5, H.wrapped(static_cast<std::ptrdiff_t>(j) + 1), fit);
  });
  return out;
}

HermiteSequence refine_Sn(const HermiteSequence& H, int n, const FitOptions& fit) {
  if (n < 1) throw Error(ErrorCode::ValidationError, "Lane-Riesenfeld degree must be >= 1");
  HermiteSequence out = refine_S1(H, fit);
  for (int round = 1; round < n; ++round) out = average_A(out, fit);
  return out;
}

HermiteSequence refine_four_point(const HermiteSequence& H, double omega, const FitOptions& fit,
                                  FourPointOuter outer) {
  detail::check_four_point_omega(omega);
  const std::size_t k = H.size();
  if (k < (H.closed ? 3u : 4u)) {
    throw Error(ErrorCode::SequenceTooShort,
                H.closed ? "closed four-point refinement needs at least 3 couples"
                         : "open four-point refinement needs at least 4 couples");
  }
  const std::size_t segments = H.secant_count();
  HermiteSequence out{std::vector<HermiteCouple>(H.closed ? 2 * k : 2 * k - 1), H.closed};

  detail::parallel_for_indices(k, [&](std::size_t j) {
    out.couples[2 * j] = H[j];
    if (j >= segments) return;
    const auto i = static_cast<std::ptrdiff_t>(j);
    const bool pad_left = !H.closed && j == 0;
    const bool pad_right = !H.closed && j + 2 == k;
    const HermiteCouple& hm1 = pad_left ? H[j] : H.wrapped(i - 1);
    const HermiteCouple& h2 = pad_right ? H.wrapped(i + 1) : H.wrapped(i + 2);
    out.couples[2 * j + 1] = detail::four_point_insert(
        hm1, H[j], H.wrapped(i + 1), h2, pad_left, pad_right, omega, fit, outer);
  });
  return out;
}

HermiteSequence refine(const HermiteSequence& H, const SchemeSpec& scheme) {
  if (scheme.kind == SchemeKind::LaneRiesenfeld) return refine_Sn(H, scheme.degree, scheme.fit);
  return refine_four_point(H, scheme.omega, scheme.fit, scheme.outer);
}

std::size_t refined_size(std::size_t k, bool closed, const SchemeSpec& scheme) {
  if (closed) return 2 * k;
  if (k < 2) return k;
  std::size_t n = 2 * k - 1;
  if (scheme.kind == SchemeKind::LaneRiesenfeld) {
    const auto rounds = static_cast<std::size_t>(scheme.degree - 1);
    n = n > rounds ? n - rounds : 0;
  }
  return n;
}

std::vector<HermiteSequence> subdivide(const HermiteSequence& H, const SchemeSpec& scheme,
                                       int levels) {
  if (levels < 0 || levels > kMaxLevels) {
    throw Error(ErrorCode::ValidationError,
                "levels must lie in [0, " + std::to_string(kMaxLevels) + "]");
  }
  scheme.validate();
  H.validate();

  std::size_t predicted = H.size();
  for (int level = 0; level < levels; ++level) {
    if (predicted < 2) break;
    predicted = refined_size(predicted, H.closed, scheme);
    if (predicted > kMaxCouples) {
      throw Error(ErrorCode::ResourceLimit,
                  "refinement would exceed " + std::to_string(kMaxCouples) + " couples");
    }
  }

  std::vector<HermiteSequence> out;
  out.reserve(static_cast<std::size_t>(levels) + 1);
  out.push_back(H);
  for (int level = 1; level <= levels; ++level) {
    try {
      out.push_back(refine(out.back(), scheme));
    } catch (const Error& e) {
      throw Error(e.code(), "level " + std::to_string(level) + ": " + e.what(), e.index());
    }
  }
  return out;
}

}  // namespace clothoid
