#include <benchmark/benchmark.h>

#include "bpfo/biperiodic.hpp"
#include "bpfo/octonion_seq.hpp"
#include "bpfo/series.hpp"

using namespace bpfo;

namespace {

SeqParams bench_context() { return make_context(Rational(2), Rational(3)); }

void BM_FibRecurrence(benchmark::State& state) {
    const auto n = state.range(0);
    for (auto _ : state) {
        SeqCache cache(bench_context());
        benchmark::DoNotOptimize(cache.fib_q(n));
    }
}
BENCHMARK(BM_FibRecurrence)->Arg(64)->Arg(256)->Arg(1024);

void BM_FibBinet(benchmark::State& state) {
    const SeqParams params = bench_context();
    const auto n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(fib_binet(params, n));
}
BENCHMARK(BM_FibBinet)->Arg(64)->Arg(256);

void BM_OctonionMul(benchmark::State& state) {
    SeqCache cache(bench_context());
    const OctQ p = oct_O(cache, 10), q = oct_O(cache, 12);
    for (auto _ : state)
        benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_OctonionMul);

void BM_OctonionBinet(benchmark::State& state) {
    const SeqParams params = bench_context();
    const BinetConstants constants = make_binet_constants(params);
    const auto n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(oct_binet(constants, params, n));
}
BENCHMARK(BM_OctonionBinet)->Arg(16)->Arg(40);

void BM_GenfunCheck(benchmark::State& state) {
    const SeqParams params = bench_context();
    const auto order = state.range(0);
    for (auto _ : state) {
        SeqCache cache(params);
        benchmark::DoNotOptimize(genfun_check(params, cache, order));
    }
}
BENCHMARK(BM_GenfunCheck)->Arg(32)->Arg(64);

} // namespace

BENCHMARK_MAIN();
