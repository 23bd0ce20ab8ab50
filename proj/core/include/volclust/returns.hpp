#pragma once

#include "volclust/series.hpp"

namespace volclust {

/// Simple tau-day returns r(t) = (p(t) - p(t-tau)) / p(t-tau), dated at the
/// later day t. Output length is prices.size() - tau.
ReturnSeries compute_returns(const PriceSeries& prices, int tau);

/// Standardize to mean 0, stddev 1 (population convention). Throws
/// DegenerateInputError when the input variance is zero.
ReturnSeries normalize_returns(const ReturnSeries& series);

}  // namespace volclust
