#include <benchmark/benchmark.h>

#include "jumprec/pipeline.hpp"
#include "jumprec/quadrature.hpp"
#include "jumprec/specfun.hpp"

using namespace jumprec;

static void BM_PollaczekRow(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(pollaczek_imag_axis(30, 150));
}
BENCHMARK(BM_PollaczekRow);

static void BM_ComputeSpectral(benchmark::State& state) {
    const auto a = forward_taylor(catalog("F3"), 31);
    for (auto _ : state) benchmark::DoNotOptimize(compute_spectral(a, 150));
}
BENCHMARK(BM_ComputeSpectral);

static void BM_DetectK0(benchmark::State& state) {
    const auto a = forward_taylor(catalog("F3"), 31);
    const auto s = compute_spectral(a, 150);
    const auto env = envelope(a);
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(detect_k0(s.energy, env));
        } catch (const no_plateau_error&) {
        }
    }
}
BENCHMARK(BM_DetectK0);

static void BM_BasisRow(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(basis_phi_real(7.3, 150));
}
BENCHMARK(BM_BasisRow);

static void BM_ReconstructGrid(benchmark::State& state) {
    const auto a = forward_taylor(catalog("F3"), 31);
    const auto s = compute_spectral(a, 150);
    const auto xs = uniform_grid(1.0, 20.0, 512);
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct(s, 71, xs));
}
BENCHMARK(BM_ReconstructGrid);

static void BM_ForwardTaylorF2(benchmark::State& state) {
    const auto& p = catalog("F2");
    for (auto _ : state) benchmark::DoNotOptimize(forward_taylor(p, 31, 1e-12));
}
BENCHMARK(BM_ForwardTaylorF2);

static void BM_GaussLaguerre200(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gauss_laguerre(200));
}
BENCHMARK(BM_GaussLaguerre200);

BENCHMARK_MAIN();
