#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace volclust {

struct AcfSeries {
    std::vector<double> values;  // index = lag; values[0] == 1
    std::size_t n_obs = 0;       // length of the analyzed sequence
    double noise_band = 0.0;     // 1.96 / sqrt(n_obs), 95% white-noise band

    std::size_t max_lag() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

/// Sample autocorrelation per lag: Pearson correlation of (x_t, x_{t+lag})
/// over the overlapping pairs, each side centered and scaled by its own
/// mean and population stddev over the overlap.
///
/// Requires x.size() > max_lag + 1 and a non-constant input; throws
/// DegenerateInputError when a lag's overlap has zero variance.
AcfSeries acf(std::span<const double> x, std::size_t max_lag);

}  // namespace volclust
