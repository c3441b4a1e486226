#include <benchmark/benchmark.h>

#include "harnack/extremal_oracle.hpp"

using namespace harnack;

static void BM_ExtremizeLine(benchmark::State& state) {
    const HalfSpacePoint a{{0.0, 0.0, 0.0}, 1.0}, b{{1.0, 0.5, -0.3}, 2.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(extremize_line(a, b));
}
BENCHMARK(BM_ExtremizeLine);

static void BM_ExtremizeGrid1D(benchmark::State& state) {
    const HalfSpacePoint a{{0.0}, 1.0}, b{{1.0}, 2.0};
    const long res = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(extremize_grid(a, b, 0.0, res));
    state.SetItemsProcessed(state.iterations() * res);
}
BENCHMARK(BM_ExtremizeGrid1D)->Arg(10001)->Arg(100001)->Arg(1000001);

static void BM_ExtremizeGrid2D(benchmark::State& state) {
    const HalfSpacePoint a{{0.0, 0.0}, 1.0}, b{{1.0, 0.0}, 2.0};
    const long res = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(extremize_grid(a, b, 0.0, res));
    state.SetItemsProcessed(state.iterations() * res * res);
}
BENCHMARK(BM_ExtremizeGrid2D)->Arg(101)->Arg(401)->Arg(1001);

static void BM_RatioProfile(benchmark::State& state) {
    const HalfSpacePoint a{{0.0, 0.0, 0.0}, 1.0}, b{{1.0, 0.5, -0.3}, 2.0};
    const Vec y{0.3, -0.2, 0.9};
    for (auto _ : state)
        benchmark::DoNotOptimize(ratio_profile(a, b, y));
}
BENCHMARK(BM_RatioProfile);

BENCHMARK_MAIN();
