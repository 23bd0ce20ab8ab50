#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "volclust/cluster.hpp"
#include "volclust/rng.hpp"
#include "volclust/surrogate.hpp"

namespace {

volclust::IndicatorSequence random_indicator(std::size_t length, double p, std::uint64_t seed) {
    volclust::Rng rng(seed);
    std::vector<std::uint8_t> bits(length);
    for (auto& b : bits) b = rng.next_unit() < p ? 1 : 0;
    return volclust::IndicatorSequence::from_bits(std::move(bits));
}

void RollingWindowCounts(benchmark::State& state) {
    const auto indicator = random_indicator(static_cast<std::size_t>(state.range(0)), 0.2, 1);
    for (auto _ : state) {
        auto freq = volclust::window_count_frequencies(indicator, 10);
        benchmark::DoNotOptimize(freq);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(RollingWindowCounts)->RangeMultiplier(4)->Range(1 << 12, 1 << 20)->Complexity();

void DirectWindowCounts(benchmark::State& state) {
    const auto indicator = random_indicator(static_cast<std::size_t>(state.range(0)), 0.2, 1);
    const std::size_t n = 10;
    for (auto _ : state) {
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t + n <= indicator.size(); ++t) {
            std::uint32_t count = 0;
            for (std::size_t i = 0; i < n; ++i) count += indicator.bits[t + i];
            acc += count;
        }
        benchmark::DoNotOptimize(acc);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(DirectWindowCounts)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Complexity();

void SigmaEmpirical(benchmark::State& state) {
    const auto indicator = random_indicator(100000, 0.2, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            volclust::sigma_empirical(indicator, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(SigmaEmpirical)->Arg(10)->Arg(60)->Arg(240);

void ClusteringIndexSweep(benchmark::State& state) {
    const auto indicator = random_indicator(static_cast<std::size_t>(state.range(0)), 0.2, 3);
    for (auto _ : state) {
        double acc = 0.0;
        for (std::size_t n = 1; n <= 240; ++n) acc += volclust::clustering_index(indicator, n);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(ClusteringIndexSweep)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
