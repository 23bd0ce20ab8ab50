#include <benchmark/benchmark.h>

#include <vector>

#include "volclust/acf.hpp"
#include "volclust/rng.hpp"

namespace {

std::vector<double> noise(std::size_t length) {
    volclust::Rng rng(7);
    std::vector<double> out(length);
    for (auto& v : out) v = rng.next_gaussian();
    return out;
}

void AcfFixedLags(benchmark::State& state) {
    const auto x = noise(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(volclust::acf(x, 100));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(AcfFixedLags)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Complexity();

void AcfLagSweep(benchmark::State& state) {
    const auto x = noise(20000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(volclust::acf(x, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(AcfLagSweep)->Arg(10)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
