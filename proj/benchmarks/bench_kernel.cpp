#include <benchmark/benchmark.h>

#include "harnack/cauchy_kernel.hpp"
#include "harnack/widder_solutions.hpp"

using namespace harnack;

static void BM_HalfLaplacianKernel(benchmark::State& state) {
    QuadratureConfig cfg;
    cfg.rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    auto k1 = [](double y) { return kernel_1d(y, 1.0); };
    for (auto _ : state)
        benchmark::DoNotOptimize(half_laplacian_1d(k1, 0.5, cfg));
}
BENCHMARK(BM_HalfLaplacianKernel)->Arg(6)->Arg(8)->Arg(10);

static void BM_HalfLaplacianLogKernel(benchmark::State& state) {
    auto f = [](double y) { return std::log(kernel_1d(y, 1.0)); };
    for (auto _ : state)
        benchmark::DoNotOptimize(half_laplacian_1d(f, 0.0));
}
BENCHMARK(BM_HalfLaplacianLogKernel);

static void BM_KernelResidual(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_residual(0.5, 1.0));
}
BENCHMARK(BM_KernelResidual);

static void BM_WidderGaussianEvaluate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    WidderSolution sol;
    sol.dimension = n;
    sol.quadrature.rel_tol = 1e-7;
    sol.measure.gaussians.push_back({Vec(n, 0.5), 0.4, 1.0});
    const HalfSpacePoint p{Vec(n, 0.0), 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate(sol, p));
}
BENCHMARK(BM_WidderGaussianEvaluate)->Arg(1)->Arg(2);
