#include <benchmark/benchmark.h>

#include "goldbach/primes.hpp"

static void BuildPrimeTable(benchmark::State& state) {
    const auto limit = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        auto t = goldbach::build_prime_table(limit);
        benchmark::DoNotOptimize(t);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BuildPrimeTable)->RangeMultiplier(10)->Range(100000, 10000000)->Complexity();

static void SegmentSizeSweep(benchmark::State& state) {
    const auto segment = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        auto t = goldbach::build_prime_table(2000000, segment);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(SegmentSizeSweep)->RangeMultiplier(4)->Range(1 << 12, 1 << 22);

static void PrefixLookups(benchmark::State& state) {
    const auto t = goldbach::build_prime_table(1000000);
    uint64_t x = 1;
    for (auto _ : state) {
        x = (x * 2862933555777941757ULL + 3037000493ULL) % 1000000;
        benchmark::DoNotOptimize(goldbach::pi_count(x, goldbach::Parity::OddOnly, t));
    }
}
BENCHMARK(PrefixLookups);

BENCHMARK_MAIN();
