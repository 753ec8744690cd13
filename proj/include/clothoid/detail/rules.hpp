#pragma once

// Per-couple refinement rules shared by the OpenMP kernels and the serial
// reference implementation.

#include "clothoid/subdivision.hpp"

namespace clothoid::detail {

/// Inserted couple of the four-point rule between h0 and h1. `pad_left` marks
/// hm1 as a copy of h0 and `pad_right` marks h2 as a copy of h1.
HermiteCouple four_point_insert(const HermiteCouple& hm1, const HermiteCouple& h0,
                                const HermiteCouple& h1, const HermiteCouple& h2, bool pad_left,
                                bool pad_right, double omega, const FitOptions& fit,
                                FourPointOuter outer);

void check_four_point_omega(double omega);

}  // namespace clothoid::detail
