#include "vnlab/approx.hpp"
#include "vnlab/field_matrix.hpp"
#include "vnlab/vnla.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace vnlab;

namespace {

// Dense integer matrix with a prescribed rank deficit, so elimination does real work.
FieldMatrix sample_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (auto& x : rows[i]) x = d(rng);
    for (std::size_t j = 0; j < n; ++j) rows[n - 1][j] = rows[0][j] + rows[1 % n][j];
    return FieldMatrix::from_rows(FieldSpec::rationals(), rows);
}

void BM_Rank(benchmark::State& state, Elimination route) {
    const auto m = sample_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m, route));
}
BENCHMARK_CAPTURE(BM_Rank, bareiss, Elimination::bareiss)->RangeMultiplier(2)->Range(16, 64);
BENCHMARK_CAPTURE(BM_Rank, gauss_jordan, Elimination::gauss_jordan)->RangeMultiplier(2)->Range(16, 64);

RingMatrix lamplighter_operator(std::size_t n) {
    const auto g = lamplighter_family().instantiate(n);
    return RingMatrix({{lamplighter_markov_operator().evaluate(g)}});
}

void BM_RegularRep(benchmark::State& state) {
    const auto a = lamplighter_operator(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(regular_rep(a));
}
BENCHMARK(BM_RegularRep)->DenseRange(3, 6);

void BM_KernelDim(benchmark::State& state, DimOptions::Strategy strategy) {
    const auto a = lamplighter_operator(static_cast<std::size_t>(state.range(0)));
    DimOptions opts;
    opts.strategy = strategy;
    for (auto _ : state) benchmark::DoNotOptimize(vn_dim_kernel(a, opts));
}
BENCHMARK_CAPTURE(BM_KernelDim, dense, DimOptions::Strategy::dense)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_KernelDim, blocks, DimOptions::Strategy::character_blocks)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_KernelDim, modular, DimOptions::Strategy::modular_screen)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_LamplighterRun(benchmark::State& state) {
    const auto family = lamplighter_family();
    const auto op = lamplighter_markov_operator();
    for (auto _ : state) benchmark::DoNotOptimize(approximation_run(family, op, 2, static_cast<std::size_t>(state.range(0)), Rational(1, 3)));
}
BENCHMARK(BM_LamplighterRun)->Arg(8)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
