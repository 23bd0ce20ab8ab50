#pragma once

#include <cstddef>
#include <vector>

#include "volclust/series.hpp"

namespace volclust {

/// Density histogram with equal-width bins and a standard-normal reference
/// curve sampled at bin centers. sum(density * width) == 1.
struct Histogram {
    std::vector<double> bin_edges;  // size = bins + 1, ascending
    std::vector<double> densities;  // size = bins
    std::vector<double> reference;  // N(0,1) pdf at bin centers

    std::vector<double> bin_centers() const;
};

/// Empirical pdf of a normalized return series over [min, max].
/// Requires mean ~ 0 and stddev ~ 1 (i.e. the output of normalize_returns)
/// and bins >= 2.
Histogram histogram_pdf(const ReturnSeries& normalized, std::size_t bins);

}  // namespace volclust
