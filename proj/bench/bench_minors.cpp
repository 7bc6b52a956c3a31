// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "xsym/amazing.hpp"
#include "xsym/minors.hpp"
#include "xsym/random_tnn.hpp"

namespace {

using namespace xsym;

Matrix<Rational> sample(std::size_t n) { return random_certified_tnn(n, 7, 3 * n).matrix; }

void BM_BruteForceSerial(benchmark::State& state) {
    const auto m = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_tnn_serial(m, RationalSigns{}));
}

void BM_BruteForceParallel(benchmark::State& state) {
    const auto m = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_tnn(m, RationalSigns{}));
}

void BM_AmazingSerial(benchmark::State& state) {
    const AmazingParams p{static_cast<std::size_t>(state.range(0)), 10, true};
    for (auto _ : state) benchmark::DoNotOptimize(amazing_matrix_serial(p));
}

void BM_AmazingParallel(benchmark::State& state) {
    const AmazingParams p{static_cast<std::size_t>(state.range(0)), 10, true};
    for (auto _ : state) benchmark::DoNotOptimize(amazing_matrix(p));
}

}  // namespace

BENCHMARK(BM_BruteForceSerial)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceParallel)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AmazingSerial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AmazingParallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
