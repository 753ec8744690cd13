#pragma once

// Plain sequential implementations of the refinement operators and sweeps.
// They define the expected output of the OpenMP kernels bit for bit and serve
// as the baseline in bench/bench_kernels.cpp.

#include "clothoid/analysis.hpp"
#include "clothoid/subdivision.hpp"

namespace clothoid::reference {

HermiteSequence refine_S1(const HermiteSequence& H, const FitOptions& fit);
HermiteSequence average_A(const HermiteSequence& H, const FitOptions& fit);
HermiteSequence refine_Sn(const HermiteSequence& H, int n, const FitOptions& fit);
HermiteSequence refine_four_point(const HermiteSequence& H, double omega, const FitOptions& fit,
                                  FourPointOuter outer = FourPointOuter::ClothoidAverage);
std::vector<HermiteSequence> subdivide(const HermiteSequence& H, const SchemeSpec& scheme,
                                       int levels);

SweepReport defect_sweep(int resolution, QuadratureConfig quad, int newton_steps);
ContractionReport contraction_sweep(int samples, const FitOptions& fit);

}  // namespace clothoid::reference
