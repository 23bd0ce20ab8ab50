#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "volclust/series.hpp"

namespace volclust::testing {

/// Seed and length of the bundled data/sample_market.csv fixture.
inline constexpr std::uint64_t kSampleSeed = 20090630ULL;
inline constexpr std::size_t kSampleDays = 10000;

/// Two-regime price path: persistent calm and turbulent stretches, with the
/// turbulent regime biased toward losses. Extreme |returns| therefore
/// cluster in episodes and the negative ones are denser inside them, so the
/// series reproduces the slow nonlinear-ACF decay and the loss-heavy
/// clustering asymmetry seen in real index data.
PriceSeries synthetic_market_series(std::string symbol, std::size_t days, std::uint64_t seed);

}  // namespace volclust::testing
