#include <benchmark/benchmark.h>

#include "ncres/annihilators.hpp"
#include "ncres/catalog.hpp"
#include "ncres/geometry.hpp"

using namespace ncres;

namespace {

void bench_scan(benchmark::State& state, Execution exec) {
    int r = int(state.range(0));
    auto alg = cyclic_mckay_algebra(r, r - 1);
    for (auto _ : state) {
        auto out = scan_thin_supports(*alg, 0, exec);
        benchmark::DoNotOptimize(out);
    }
}

void bench_matchings(benchmark::State& state, Execution exec) {
    auto alg = abelian_su3_algebra(4);
    for (auto _ : state) {
        auto out = perfect_matchings(*alg, exec);
        benchmark::DoNotOptimize(out);
    }
}

} // namespace

BENCHMARK_CAPTURE(bench_scan, serial, Execution::serial)->Arg(10)->Arg(12)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_scan, parallel, Execution::parallel)->Arg(10)->Arg(12)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_matchings, serial, Execution::serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_matchings, parallel, Execution::parallel)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
