#include <benchmark/benchmark.h>

#include "goldbach/counts.hpp"

using namespace goldbach;

namespace {
const PrimeTable& table() {
    static const PrimeTable t = build_prime_table(4000000);
    return t;
}
} // namespace

static void RTableTransform(benchmark::State& state) {
    const auto M = static_cast<uint64_t>(state.range(0));
    const auto& t = table();
    for (auto _ : state) {
        auto rt = r_table(M, t);
        benchmark::DoNotOptimize(rt);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(RTableTransform)->RangeMultiplier(4)->Range(16384, 1048576)->Complexity();

static void RTableDirect(benchmark::State& state) {
    const auto M = static_cast<uint64_t>(state.range(0));
    const auto& t = table();
    for (auto _ : state) {
        auto rt = r_table_direct(M, t);
        benchmark::DoNotOptimize(rt);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(RTableDirect)->RangeMultiplier(4)->Range(1024, 16384)->Complexity();

static void SummatoryAccumulation(benchmark::State& state) {
    const auto M = static_cast<uint64_t>(state.range(0));
    const auto& t = table();
    for (auto _ : state)
        benchmark::DoNotOptimize(summatory_a(M, SumMethod::DivisorAccumulation, t).value);
}
BENCHMARK(SummatoryAccumulation)->Arg(10000)->Arg(100000);

static void SummatoryTelescoped(benchmark::State& state) {
    const auto M = static_cast<uint64_t>(state.range(0));
    const auto& t = table();
    for (auto _ : state)
        benchmark::DoNotOptimize(summatory_a(M, SumMethod::TelescopedQ, t).value);
}
BENCHMARK(SummatoryTelescoped)->Arg(10000)->Arg(100000)->Arg(1000000);

static void QCount(benchmark::State& state) {
    const auto x = static_cast<uint64_t>(state.range(0));
    const auto& t = table();
    for (auto _ : state)
        benchmark::DoNotOptimize(q_count(x, Parity::OddOnly, t));
}
BENCHMARK(QCount)->Arg(100000)->Arg(1000000);

BENCHMARK_MAIN();
