#include <benchmark/benchmark.h>

#include <random>

#include "goldbach/poly.hpp"
#include "goldbach/primes.hpp"

using namespace goldbach;

namespace {

const PrimeTable& table() {
    static const PrimeTable t = build_prime_table(1000);
    return t;
}

IntPoly random_poly(size_t len, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-1000, 1000);
    std::vector<mpz_class> c(len);
    for (auto& v : c) v = coeff(rng);
    return IntPoly(std::move(c));
}

} // namespace

static void BuildFn(benchmark::State& state) {
    const auto N = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        auto f = build_fn(N, table());
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BuildFn)->Arg(50)->Arg(100)->Arg(200);

static void PolyMul(benchmark::State& state) {
    const auto len = static_cast<size_t>(state.range(0));
    const IntPoly a = random_poly(len, 1);
    const IntPoly b = random_poly(len, 2);
    for (auto _ : state) {
        auto p = poly_mul(a, b);
        benchmark::DoNotOptimize(p);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(PolyMul)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

static void QuotientF2N(benchmark::State& state) {
    const auto N = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        auto q = quotient_f2n(N, table());
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(QuotientF2N)->Arg(10)->Arg(50)->Arg(100);

static void Cyclotomic(benchmark::State& state) {
    // the memo makes repeat lookups cheap; rebuild cost shows on first touch
    const auto k = static_cast<uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cyclotomic(k));
}
BENCHMARK(Cyclotomic)->Arg(105)->Arg(400);

BENCHMARK_MAIN();
