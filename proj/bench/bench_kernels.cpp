// Serial reference kernels against the OpenMP ones.
#include <benchmark/benchmark.h>

#include <cmath>

#include "clothoid/analysis.hpp"
#include "clothoid/reference.hpp"
#include "clothoid/subdivision.hpp"

using namespace clothoid;

namespace {

HermiteSequence wavy(std::size_t k) {
  HermiteSequence H;
  H.closed = true;
  for (std::size_t j = 0; j < k; ++j) {
    const double t = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(k);
    const double r = 1.0 + 0.1 * std::sin(5.0 * t);
    const Point2 p = std::polar(r, t);
    const Point2 dp = std::polar(0.5 * std::cos(5.0 * t), t) + std::polar(r, t + kPi / 2);
    H.couples.push_back({p, std::arg(dp)});
  }
  return H;
}

void BM_subdivide(benchmark::State& state, bool parallel, SchemeSpec scheme) {
  const auto H = wavy(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if (parallel) {
      benchmark::DoNotOptimize(subdivide(H, scheme, 6));
    } else {
      benchmark::DoNotOptimize(reference::subdivide(H, scheme, 6));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 64);
}

template <bool Parallel>
void BM_defect_sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(defect_sweep(n, QuadratureConfig::high_accuracy(), 0));
    } else {
      benchmark::DoNotOptimize(reference::defect_sweep(n, QuadratureConfig::high_accuracy(), 0));
    }
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

template <bool Parallel>
void BM_contraction_sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(contraction_sweep(n, {}));
    } else {
      benchmark::DoNotOptimize(reference::contraction_sweep(n, {}));
    }
  }
  state.SetItemsProcessed(state.iterations() * n);
}

}  // namespace

BENCHMARK_CAPTURE(BM_subdivide, S1_serial, false, SchemeSpec::lane_riesenfeld(1))->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_subdivide, S1_omp, true, SchemeSpec::lane_riesenfeld(1))->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_subdivide, S3_serial, false, SchemeSpec::lane_riesenfeld(3))->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_subdivide, S3_omp, true, SchemeSpec::lane_riesenfeld(3))->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_subdivide, four_point_serial, false, SchemeSpec::four_point(-1.0 / 18.0))
    ->Arg(64)
    ->Arg(256);
BENCHMARK_CAPTURE(BM_subdivide, four_point_omp, true, SchemeSpec::four_point(-1.0 / 18.0))
    ->Arg(64)
    ->Arg(256);
BENCHMARK(BM_defect_sweep<false>)->Arg(129)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_defect_sweep<true>)->Arg(129)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_contraction_sweep<false>)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_contraction_sweep<true>)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
