#include <benchmark/benchmark.h>

#include "gegwp/gegenbauer.hpp"

using namespace gegwp;

static void BM_BandPassVariance(benchmark::State& state) {
    GegenbauerModel model({{0.4, Frequency::rational(1, 12)}});
    int j = static_cast<int>(state.range(0));
    int p = (1 << j) / 6;   // band near the singularity
    for (auto _ : state)
        benchmark::DoNotOptimize(band_pass_variance(model, j, p, 1e-8));
}
BENCHMARK(BM_BandPassVariance)->DenseRange(2, 10)->Unit(benchmark::kMicrosecond);

static void BM_AutocovarianceLag(benchmark::State& state) {
    GegenbauerModel model({{0.4, Frequency::rational(1, 12)}});
    int h = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(autocovariance(model, h, 1e-7));
}
BENCHMARK(BM_AutocovarianceLag)->Arg(0)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_CovarianceMatrix(benchmark::State& state) {
    GegenbauerModel model({{0.3, Frequency::of(0.016)}});
    int N = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(covariance_matrix(model, N, 1e-6));
}
BENCHMARK(BM_CovarianceMatrix)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
