#include <benchmark/benchmark.h>

#include <random>

#include "harnack/halfspace_geometry.hpp"
#include "harnack/harnack_bounds.hpp"

using namespace harnack;

namespace {

std::vector<std::pair<HalfSpacePoint, HalfSpacePoint>> make_pairs(int n, int count) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coord(-10.0, 10.0), time(0.1, 10.0);
    std::vector<std::pair<HalfSpacePoint, HalfSpacePoint>> pairs;
    pairs.reserve(count);
    for (int i = 0; i < count; ++i) {
        Vec xa(n), xb(n);
        for (int k = 0; k < n; ++k) {
            xa[k] = coord(rng);
            xb[k] = coord(rng);
        }
        pairs.push_back({{xa, time(rng)}, {xb, time(rng)}});
    }
    return pairs;
}

}  // namespace

static void BM_GeodesicThrough(benchmark::State& state) {
    const auto pairs = make_pairs(static_cast<int>(state.range(0)), 256);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [a, b] = pairs[i++ % pairs.size()];
        benchmark::DoNotOptimize(geodesic_through(a, b));
    }
}
BENCHMARK(BM_GeodesicThrough)->Arg(1)->Arg(3)->Arg(8);

static void BM_SharpBounds(benchmark::State& state) {
    const auto pairs = make_pairs(static_cast<int>(state.range(0)), 256);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [a, b] = pairs[i++ % pairs.size()];
        benchmark::DoNotOptimize(sharp_bounds(a, b));
    }
}
BENCHMARK(BM_SharpBounds)->Arg(1)->Arg(3)->Arg(8);

static void BM_KernelGeometryIdentity(benchmark::State& state) {
    const auto pairs = make_pairs(static_cast<int>(state.range(0)), 256);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [a, b] = pairs[i++ % pairs.size()];
        benchmark::DoNotOptimize(kernel_geometry_identity(a, b));
    }
}
BENCHMARK(BM_KernelGeometryIdentity)->Arg(1)->Arg(4);

static void BM_HyperbolicDistance(benchmark::State& state) {
    const auto pairs = make_pairs(3, 256);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [a, b] = pairs[i++ % pairs.size()];
        benchmark::DoNotOptimize(hyperbolic_distance(a, b));
    }
}
BENCHMARK(BM_HyperbolicDistance);
