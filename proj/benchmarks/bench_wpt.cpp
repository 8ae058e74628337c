#include <benchmark/benchmark.h>

#include <random>

#include "gegwp/bestbasis.hpp"
#include "gegwp/wpt.hpp"

using namespace gegwp;

namespace {

std::vector<double> noise(std::size_t n) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    std::vector<double> x(n);
    for (auto& v : x) v = g(rng);
    return x;
}

} // namespace

static void BM_Analyze(benchmark::State& state) {
    int J = static_cast<int>(state.range(0));
    auto tree = best_basis_1factor(Frequency::rational(1, 12), J);
    auto filter = make_filter("db10");
    auto x = noise(std::size_t{1} << J);
    for (auto _ : state)
        benchmark::DoNotOptimize(analyze(x, tree, filter));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << J));
}
BENCHMARK(BM_Analyze)->DenseRange(8, 13);

static void BM_RoundTrip(benchmark::State& state) {
    int J = static_cast<int>(state.range(0));
    auto tree = best_basis_1factor(Frequency::rational(1, 12), J);
    auto filter = make_filter("db10");
    auto x = noise(std::size_t{1} << J);
    for (auto _ : state)
        benchmark::DoNotOptimize(synthesize(analyze(x, tree, filter), filter));
}
BENCHMARK(BM_RoundTrip)->DenseRange(8, 12);

static void BM_TransformMatrix(benchmark::State& state) {
    int J = static_cast<int>(state.range(0));
    auto tree = best_basis_1factor(Frequency::rational(1, 12), J);
    auto filter = make_filter("db10");
    for (auto _ : state)
        benchmark::DoNotOptimize(transform_matrix(tree, filter, 1 << J));
}
BENCHMARK(BM_TransformMatrix)->DenseRange(6, 9);
