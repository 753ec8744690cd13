#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "clothoid/analysis.hpp"
#include "clothoid/error.hpp"
#include "clothoid/subdivision.hpp"
#include "support.hpp"

using namespace clothoid;
using testsupport::circle_sequence;
using testsupport::line_sequence;

namespace {

Error error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no Error thrown";
  return Error(ErrorCode::ValidationError, "none");
}

double max_radial_error(const HermiteSequence& H, Point2 center, double radius) {
  double worst = 0.0;
  for (const auto& h : H.couples) worst = std::max(worst, std::abs(std::abs(h.point - center) - radius));
  return worst / radius;
}

double cross(Point2 u, Point2 v) { return u.real() * v.imag() - u.imag() * v.real(); }

}  // namespace

TEST(ClothoidAverage, Examples) {
  const HermiteCouple a{{0, 0}, 0.0};
  const HermiteCouple b{{1, 0}, 0.0};
  const auto mid = clothoid_average(0.5, a, 0.5, b, {});
  EXPECT_NEAR(std::abs(mid.point - Point2(0.5, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(mid.angle, 0.0, 1e-15);

  // Arc of radius R = 1/sqrt(2) centred at (1/2, -1/2): the midpoint sits at the
  // sagitta height R - 1/2 above the chord.
  const auto arc = clothoid_average(0.5, {{0, 0}, kPi / 4}, 0.5, {{1, 0}, -kPi / 4},
                                    FitOptions::reference());
  EXPECT_NEAR(std::abs(arc.point - Point2(0.5, 1.0 / std::sqrt(2.0) - 0.5)), 0.0, 1e-12);
  EXPECT_NEAR(arc.angle, 0.0, 1e-12);

  const double w = -1.0 / 18.0;
  const auto ext = clothoid_average(w, a, 1.0 - w, b, {});
  EXPECT_NEAR(std::abs(ext.point - Point2(19.0 / 18.0, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(ext.angle, 0.0, 1e-15);
}

TEST(ClothoidAverage, EndWeightsReturnTheCouples) {
  const HermiteCouple a{{0.2, -1.0}, 0.4};
  const HermiteCouple b{{2.0, 0.5}, 1.1};
  const auto first = clothoid_average(1.0, a, 0.0, b, {});
  EXPECT_EQ(first.point, a.point);
  const auto last = clothoid_average(0.0, a, 1.0, b, {});
  EXPECT_NEAR(std::abs(last.point - b.point), 0.0, 1e-14);
}

TEST(ClothoidAverage, WeightSum) {
  EXPECT_EQ(error_of([] { clothoid_average(0.5, {{0, 0}, 0}, 0.6, {{1, 0}, 0}, {}); }).code(),
            ErrorCode::WeightSum);
  EXPECT_NO_THROW(clothoid_average(0.5 + 1e-13, {{0, 0}, 0}, 0.5, {{1, 0}, 0}, {}));
}

TEST(RefineS1, LengthsAndInterpolation) {
  const auto open = line_sequence(5);
  const auto closed = circle_sequence(6);
  const auto r_open = refine_S1(open, {});
  const auto r_closed = refine_S1(closed, {});
  EXPECT_EQ(r_open.size(), 9u);
  EXPECT_FALSE(r_open.closed);
  EXPECT_EQ(r_closed.size(), 12u);
  EXPECT_TRUE(r_closed.closed);
  for (std::size_t j = 0; j < open.size(); ++j) EXPECT_EQ(r_open[2 * j], open[j]);
  for (std::size_t j = 0; j < closed.size(); ++j) EXPECT_EQ(r_closed[2 * j], closed[j]);
}

TEST(RefineS1, TwoPointLine) {
  const auto r = refine_S1(line_sequence(2, {1, 1}, {2, 1}), {});
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(cross(r[1].point - r[0].point, r[2].point - r[0].point), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r[1].point - Point2(2.0, 1.5)), 0.0, 1e-14);
}

TEST(RefineS1, SquareOnUnitCircle) {
  const auto H = circle_sequence(4);
  const auto exact = refine_S1(H, FitOptions::reference());
  ASSERT_EQ(exact.size(), 8u);
  EXPECT_LE(max_radial_error(exact, {0, 0}, 1.0), 1e-9);
  EXPECT_LE(circle_reproduction_error(std::vector{exact}, {0, 0}, 1.0), 1e-9);
  const auto plain = refine_S1(H, {});
  EXPECT_LE(max_radial_error(plain, {0, 0}, 1.0), 1e-4);
}

TEST(RefineS1, ParallelNormalsGiveOddSymmetricSShape) {
  // Equal tangent angles at both ends: parallel normals, both tilted from the secant.
  HermiteSequence H{{{{0, 0}, kPi / 4}, {{1, 0}, kPi / 4}}, false};
  std::vector<HermiteSequence> levels{H};
  for (int l = 0; l < 4; ++l) levels.push_back(refine_S1(levels.back(), FitOptions::reference()));
  const auto& fine = levels.back();
  const std::size_t n = fine.size();
  ASSERT_EQ(n, 17u);
  const Point2 mid(0.5, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    EXPECT_NEAR(std::abs(fine[j].point - (2.0 * mid - fine[n - 1 - j].point)), 0.0, 1e-9);
  }
  const auto kappa = estimate_curvature(points_of(fine), false);
  EXPECT_LT(kappa[2], 0.0);
  EXPECT_GT(kappa[n - 3], 0.0);
  int sign_changes = 0;
  for (std::size_t j = 2; j + 1 < n; ++j) {
    if ((kappa[j] > 0) != (kappa[j - 1] > 0)) ++sign_changes;
  }
  EXPECT_EQ(sign_changes, 1);
  for (std::size_t l = 1; l < levels.size(); ++l) {
    for (std::size_t j = 0; j < levels[l - 1].size(); ++j) {
      EXPECT_EQ(levels[l][2 * j], levels[l - 1][j]);
    }
  }
}

TEST(AverageA, Lengths) {
  EXPECT_EQ(average_A(line_sequence(5), {}).size(), 4u);
  EXPECT_EQ(average_A(circle_sequence(5), {}).size(), 5u);
  EXPECT_EQ(error_of([] { average_A(line_sequence(2), {}); }).code(), ErrorCode::SequenceTooShort);
}

TEST(AverageA, CollinearMidpoints) {
  const auto H = line_sequence(6, {0, 0}, {0.5, 0.25});
  const auto A = average_A(H, {});
  for (std::size_t j = 0; j < A.size(); ++j) {
    EXPECT_NEAR(std::abs(A[j].point - 0.5 * (H[j].point + H[j + 1].point)), 0.0, 1e-14);
    EXPECT_NEAR(A[j].angle, H[0].angle, 1e-14);
  }
}

TEST(AverageA, CircleBisectingAngles) {
  const auto H = circle_sequence(7, {1, -2}, 3.0, 0.2);
  const auto A = average_A(H, FitOptions::reference());
  for (std::size_t j = 0; j < A.size(); ++j) {
    const double theta = 0.2 + 2 * kPi * (static_cast<double>(j) + 0.5) / 7;
    EXPECT_NEAR(std::abs(A[j].point - (Point2(1, -2) + std::polar(3.0, theta))), 0.0, 1e-9);
  }
}

TEST(RefineSn, Composition) {
  const auto H = circle_sequence(5, {0, 0}, 1.0, 0.0);
  EXPECT_EQ(refine_Sn(H, 1, {}), refine_S1(H, {}));
  EXPECT_EQ(refine_Sn(H, 2, {}), average_A(refine_S1(H, {}), {}));
  EXPECT_EQ(refine_Sn(H, 3, {}), average_A(average_A(refine_S1(H, {}), {}), {}));
  const auto S2 = refine_Sn(H, 2, FitOptions::reference());
  EXPECT_LE(max_radial_error(S2, {0, 0}, 1.0), 1e-9);
  EXPECT_EQ(refine_Sn(line_sequence(6), 3, {}).size(), 9u);
}

TEST(FourPoint, CollinearIsClassicalLinearRule) {
  for (double w : {-1.0 / 18.0, -1.0 / 16.0, -0.2}) {
    for (auto outer : {FourPointOuter::ClothoidAverage, FourPointOuter::ComponentwiseMean}) {
      const Point2 step = std::polar(0.7, 0.9);
      const auto H = line_sequence(6, {1, 2}, step);
      const auto R = refine_four_point(H, w, {}, outer);
      for (std::size_t j = 1; j + 2 < H.size(); ++j) {
        const Point2 want = w / 2 * H[j - 1].point + (1 - w) / 2 * H[j].point +
                            (1 - w) / 2 * H[j + 1].point + w / 2 * H[j + 2].point;
        EXPECT_NEAR(std::abs(R[2 * j + 1].point - want), 0.0, 1e-12);
        EXPECT_NEAR(R[2 * j + 1].angle, std::arg(step), 1e-12);
      }
    }
  }
}

TEST(FourPoint, CircleStaysOnCircle) {
  const auto H = circle_sequence(8);
  const auto R = refine_four_point(H, -1.0 / 18.0, {});
  EXPECT_LE(max_radial_error(R, {0, 0}, 1.0), 5e-3);
  const auto exact = refine_four_point(H, -1.0 / 18.0, FitOptions::reference());
  EXPECT_LE(circle_reproduction_error(std::vector{exact}, {0, 0}, 1.0), 1e-9);
}

TEST(FourPoint, InterpolatoryAndBoundaries) {
  std::mt19937_64 rng(3);
  auto H = testsupport::random_admissible_closed(rng);
  const auto R = refine_four_point(H, -1.0 / 18.0, {});
  for (std::size_t j = 0; j < H.size(); ++j) EXPECT_EQ(R[2 * j], H[j]);

  HermiteSequence open = H;
  open.closed = false;
  const auto Ro = refine_four_point(open, -1.0 / 18.0, {});
  EXPECT_EQ(Ro.size(), 2 * open.size() - 1);
  for (std::size_t j = 0; j < open.size(); ++j) EXPECT_EQ(Ro[2 * j], open[j]);

  EXPECT_EQ(error_of([] { refine_four_point(line_sequence(3), -0.05, {}); }).code(),
            ErrorCode::SequenceTooShort);
  EXPECT_NO_THROW(refine_four_point(circle_sequence(3), -0.05, {}));
  EXPECT_EQ(error_of([] { refine_four_point(circle_sequence(4), 0.05, {}); }).code(),
            ErrorCode::ValidationError);
  EXPECT_EQ(error_of([] { refine_four_point(circle_sequence(4), -0.3, {}); }).code(),
            ErrorCode::ValidationError);
}

TEST(FourPoint, OpenEndsUseRepeatedCouples) {
  // With h_{-1} := h_0 the first inserted couple averages h_0 with the
  // extrapolation from (h_1, h_2).
  const auto H = line_sequence(4);
  const auto R = refine_four_point(H, -1.0 / 18.0, {});
  const double w = -1.0 / 18.0;
  EXPECT_NEAR(std::abs(R[1].point - 0.5 * (H[0].point + ((1 - w) * H[1].point + w * H[2].point))),
              0.0, 1e-12);
}

TEST(Subdivide, LevelsAndCounts) {
  const auto H = circle_sequence(8);
  const auto zero = subdivide(H, SchemeSpec::lane_riesenfeld(1), 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0], H);
  const auto eight = subdivide(H, SchemeSpec::lane_riesenfeld(1), 8);
  ASSERT_EQ(eight.size(), 9u);
  EXPECT_EQ(eight.back().size(), 2048u);
  for (std::size_t l = 1; l < eight.size(); ++l) EXPECT_EQ(eight[l], refine_S1(eight[l - 1], {}));
}

TEST(Subdivide, Guards) {
  const auto H = circle_sequence(8);
  EXPECT_EQ(error_of([&] { subdivide(H, SchemeSpec::lane_riesenfeld(1), 13); }).code(),
            ErrorCode::ValidationError);
  EXPECT_EQ(error_of([&] { subdivide(H, SchemeSpec::lane_riesenfeld(1), -1); }).code(),
            ErrorCode::ValidationError);
  EXPECT_EQ(error_of([&] { subdivide(H, SchemeSpec::lane_riesenfeld(9), 1); }).code(),
            ErrorCode::ValidationError);
  const auto big = circle_sequence(512);
  EXPECT_EQ(error_of([&] { subdivide(big, SchemeSpec::lane_riesenfeld(1), 12); }).code(),
            ErrorCode::ResourceLimit);
  EXPECT_EQ(refined_size(5, false, SchemeSpec::lane_riesenfeld(3)), 7u);
  EXPECT_EQ(refined_size(5, false, SchemeSpec::four_point(-0.05)), 9u);
  EXPECT_EQ(refined_size(5, true, SchemeSpec::lane_riesenfeld(3)), 10u);
}

TEST(Subdivide, DegenerateSecantReportsIndex) {
  auto H = circle_sequence(6);
  H.couples[4].point = H.couples[3].point;
  const auto e = error_of([&] { subdivide(H, SchemeSpec::lane_riesenfeld(2), 2); });
  EXPECT_EQ(e.code(), ErrorCode::DegenerateSecant);
  ASSERT_TRUE(e.index().has_value());
  EXPECT_EQ(*e.index(), 3u);
}

TEST(Subdivide, RotatedIndexPeriodicity) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const auto H = testsupport::random_admissible_closed(rng);
    const std::size_t k = H.size();
    const std::size_t shift = 2;
    HermiteSequence rotated{{}, true};
    for (std::size_t j = 0; j < k; ++j) rotated.couples.push_back(H[(j + shift) % k]);
    for (const auto& scheme : {SchemeSpec::lane_riesenfeld(1), SchemeSpec::lane_riesenfeld(3),
                               SchemeSpec::four_point(-1.0 / 18.0)}) {
      const auto a = subdivide(H, scheme, 3).back();
      const auto b = subdivide(rotated, scheme, 3).back();
      const std::size_t n = a.size();
      const std::size_t offset = shift << 3;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& x = a[(j + offset) % n];
        const auto& y = b[j];
        ASSERT_NEAR(std::abs(x.point - y.point), 0.0, 1e-12);
        ASSERT_NEAR(testsupport::angle_gap(x.angle, y.angle), 0.0, 1e-12);
      }
    }
  }
}

TEST(Subdivide, ConsecutiveAnglesStayOnOneBranch) {
  const auto H = circle_sequence(6);
  for (const auto& scheme : {SchemeSpec::lane_riesenfeld(1), SchemeSpec::lane_riesenfeld(3),
                             SchemeSpec::four_point(-1.0 / 18.0)}) {
    const auto levels = subdivide(H, scheme, 5);
    for (const auto& L : levels) {
      for (std::size_t j = 1; j < L.size(); ++j) {
        ASSERT_LT(std::abs(L[j].angle - L[j - 1].angle), kPi);
      }
    }
  }
}
