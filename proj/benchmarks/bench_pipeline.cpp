#include <benchmark/benchmark.h>

#include "reglab/evaluate.hpp"
#include "reglab/families.hpp"
#include "reglab/homology.hpp"

using namespace reglab;

static void BM_EvaluatePiece(benchmark::State& state) {
    int n = int(state.range(0));
    GradedMatrix f = example2::phi(n);
    int d = 2 * n;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_sparse(f, d));
    }
}
BENCHMARK(BM_EvaluatePiece)->Arg(6)->Arg(10)->Arg(14);

// component-split rank of a family piece vs. the dense elimination
static void BM_PieceRankSplit(benchmark::State& state) {
    int n = int(state.range(0));
    GradedMatrix f = example2::phi(n);
    int d = 2 * n;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_in_degree(f, d));
    }
}
BENCHMARK(BM_PieceRankSplit)->Arg(6)->Arg(10)->Arg(14);

static void BM_PieceRankDense(benchmark::State& state) {
    int n = int(state.range(0));
    GradedMatrix f = example2::phi(n);
    int d = 2 * n;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_in_degree(f, d).rank());
    }
}
BENCHMARK(BM_PieceRankDense)->Arg(6)->Arg(10);

static void BM_KernelGenerators(benchmark::State& state) {
    int n = int(state.range(0));
    GradedMatrix f = example2::phi(n);
    int cap = closed_forms::ker_phi_regularity(n) + 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_generators(f, cap));
    }
}
BENCHMARK(BM_KernelGenerators)->Arg(3)->Arg(5)->Arg(7);

static void BM_TorRegularityFamily2(benchmark::State& state) {
    int n = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(example2::tor_regularity(n));
    }
}
BENCHMARK(BM_TorRegularityFamily2)->Arg(4)->Arg(8)->Arg(12);

static void BM_CoefficientIdeal(benchmark::State& state) {
    int n = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(example2::coefficient_ideal_expanded(n));
    }
}
BENCHMARK(BM_CoefficientIdeal)->Arg(15)->Arg(31)->Arg(40);

BENCHMARK_MAIN();
