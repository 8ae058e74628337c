#include <benchmark/benchmark.h>

#include "gegwp/bestbasis.hpp"

using namespace gegwp;

static void BM_BestBasis1Factor(benchmark::State& state) {
    auto nu = Frequency::rational(1, 12);
    int J = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(best_basis_1factor(nu, J));
}
BENCHMARK(BM_BestBasis1Factor)->DenseRange(6, 13);

static void BM_BestBasisKFactor(benchmark::State& state) {
    std::vector<Frequency> nus{Frequency::rational(1, 12), Frequency::rational(1, 24),
                               Frequency::rational(1, 5)};
    int J = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(best_basis_kfactor(nus, J));
}
BENCHMARK(BM_BestBasisKFactor)->DenseRange(6, 13);

static void BM_WhitcherBasis(benchmark::State& state) {
    std::vector<Frequency> nus{Frequency::rational(1, 12)};
    auto filter = make_filter("db10");
    int J = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(whitcher_basis(nus, filter, J));
}
BENCHMARK(BM_WhitcherBasis)->DenseRange(6, 13);
