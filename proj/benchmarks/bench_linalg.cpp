#include <benchmark/benchmark.h>

#include <random>

#include "reglab/matrix.hpp"

using namespace reglab;

namespace {

PrimeFieldMatrix random_gf2(std::size_t n, MatrixStorage storage, std::uint32_t seed) {
    std::mt19937 rng(seed);
    PrimeFieldMatrix m(FieldSpec::gf(2), n, n, storage);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set_entry(i, j, std::int64_t(rng() & 1));
    return m;
}

}  // namespace

static void BM_RankGF2Bitpacked(benchmark::State& state) {
    auto m = random_gf2(std::size_t(state.range(0)), MatrixStorage::bitpacked, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.rank());
    }
}
BENCHMARK(BM_RankGF2Bitpacked)->Arg(256)->Arg(1024)->Arg(2048);

static void BM_RankGF2Scalar(benchmark::State& state) {
    auto m = random_gf2(std::size_t(state.range(0)), MatrixStorage::scalar, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.rank());
    }
}
BENCHMARK(BM_RankGF2Scalar)->Arg(256)->Arg(1024);

static void BM_RankGFp(benchmark::State& state) {
    std::mt19937 rng(7);
    std::size_t n = std::size_t(state.range(0));
    PrimeFieldMatrix m(FieldSpec::gf(32749), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set_entry(i, j, std::int64_t(rng() % 32749));
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.rank());
    }
}
BENCHMARK(BM_RankGFp)->Arg(128)->Arg(512);

static void BM_KernelGF2(benchmark::State& state) {
    auto m = random_gf2(std::size_t(state.range(0)), MatrixStorage::bitpacked, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.kernel_basis());
    }
}
BENCHMARK(BM_KernelGF2)->Arg(256)->Arg(1024);

static void BM_RankRational(benchmark::State& state) {
    std::mt19937 rng(3);
    std::size_t n = std::size_t(state.range(0));
    PrimeFieldMatrix m(FieldSpec::rationals(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set_entry(i, j, std::int64_t(int(rng() % 7) - 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.rank());
    }
}
BENCHMARK(BM_RankRational)->Arg(32)->Arg(96);
