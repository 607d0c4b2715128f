#include <benchmark/benchmark.h>

#include "hexid/code.hpp"
#include "hexid/density.hpp"
#include "hexid/verifier.hpp"

using namespace hexid;

namespace {

void BM_IdentifyingSet(benchmark::State& state) {
    const CodeParams p = make_params(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(identifying_set({3, 2}, p));
}
BENCHMARK(BM_IdentifyingSet)->Arg(6)->Arg(12)->Arg(20);

void BM_Verify(benchmark::State& state) {
    const CodeParams p = make_params(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify(p));
}
BENCHMARK(BM_Verify)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Claim9(benchmark::State& state) {
    const CodeParams p = make_params(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_claim9_detailed(p));
}
BENCHMARK(BM_Claim9)->Arg(6)->Arg(12);

void BM_DensityExact(benchmark::State& state) {
    const CodeParams p = make_params(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(density_exact(p));
}
BENCHMARK(BM_DensityExact)->Arg(20)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
