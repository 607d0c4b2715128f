#include <benchmark/benchmark.h>

#include "hexid/lattice.hpp"

using namespace hexid;

namespace {

void BM_ClosedFormDistance(benchmark::State& state) {
    int acc = 0;
    for (auto _ : state) {
        for (int dx = -16; dx <= 16; ++dx)
            for (int dy = -16; dy <= 16; ++dy) acc += distance({0, 0}, {dx, dy});
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * 33 * 33);
}
BENCHMARK(BM_ClosedFormDistance);

void BM_BfsDistance(benchmark::State& state) {
    const int dy = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bfs_distance({0, 0}, {1, dy}));
}
BENCHMARK(BM_BfsDistance)->Arg(4)->Arg(12)->Arg(20);

void BM_Ball(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ball({0, 0}, r));
}
BENCHMARK(BM_Ball)->Arg(6)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
