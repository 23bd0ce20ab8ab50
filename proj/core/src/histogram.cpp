#include "volclust/histogram.hpp"

#include <algorithm>
#include <cmath>

#include "volclust/errors.hpp"

namespace volclust {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double standard_normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(kTwoPi); }

}  // namespace

std::vector<double> Histogram::bin_centers() const {
    std::vector<double> centers;
    centers.reserve(densities.size());
    for (std::size_t i = 0; i < densities.size(); ++i) {
        centers.push_back(0.5 * (bin_edges[i] + bin_edges[i + 1]));
    }
    return centers;
}

Histogram histogram_pdf(const ReturnSeries& normalized, std::size_t bins) {
    if (bins < 2) throw InvalidArgumentError("need at least 2 bins");
    if (normalized.size() == 0) throw DegenerateInputError("empty series");
    if (std::abs(normalized.mean()) > 1e-6 || std::abs(normalized.stddev() - 1.0) > 1e-6) {
        throw InvalidArgumentError("histogram_pdf expects a normalized series (mean 0, stddev 1)");
    }

    const auto values = normalized.values();
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (lo == hi) throw DegenerateInputError("all values identical");

    const double width = (hi - lo) / static_cast<double>(bins);

    Histogram h;
    h.bin_edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) {
        h.bin_edges[i] = lo + static_cast<double>(i) * width;
    }
    h.bin_edges[bins] = hi;  // guard against drift in the last edge

    std::vector<std::size_t> counts(bins, 0);
    for (double v : values) {
        auto idx = static_cast<std::size_t>((v - lo) / width);
        if (idx >= bins) idx = bins - 1;  // the max lands in the closed last bin
        ++counts[idx];
    }

    const double norm = static_cast<double>(values.size()) * width;
    h.densities.resize(bins);
    h.reference.resize(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        h.densities[i] = static_cast<double>(counts[i]) / norm;
        h.reference[i] = standard_normal_pdf(0.5 * (h.bin_edges[i] + h.bin_edges[i + 1]));
    }
    return h;
}

}  // namespace volclust
