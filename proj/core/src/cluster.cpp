#include "volclust/cluster.hpp"

#include <cmath>
#include <string>

#include "volclust/errors.hpp"

namespace volclust {

namespace {

void check_window(std::size_t n, std::size_t length) {
    if (n == 0 || n > length) {
        throw InvalidArgumentError("window size " + std::to_string(n) +
                                   " out of range for a sequence of length " +
                                   std::to_string(length));
    }
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgumentError("probability must lie in [0, 1], got " + std::to_string(p));
    }
}

}  // namespace

WindowCountDistribution window_counts(const IndicatorSequence& indicator, std::size_t n) {
    check_window(n, indicator.size());
    const auto& bits = indicator.bits;
    const std::size_t positions = bits.size() - n + 1;

    WindowCountDistribution dist;
    dist.window = n;
    dist.counts.reserve(positions);
    dist.frequency.assign(n + 1, 0);

    std::uint32_t running = 0;
    for (std::size_t i = 0; i < n; ++i) running += bits[i];
    dist.counts.push_back(running);
    ++dist.frequency[running];
    for (std::size_t t = 1; t < positions; ++t) {
        running += bits[t + n - 1];
        running -= bits[t - 1];
        dist.counts.push_back(running);
        ++dist.frequency[running];
    }
    return dist;
}

std::vector<std::uint64_t> window_count_frequencies(const IndicatorSequence& indicator,
                                                    std::size_t n) {
    check_window(n, indicator.size());
    const auto& bits = indicator.bits;
    std::vector<std::uint64_t> frequency(n + 1, 0);

    std::uint32_t running = 0;
    for (std::size_t i = 0; i < n; ++i) running += bits[i];
    ++frequency[running];
    for (std::size_t t = n; t < bits.size(); ++t) {
        running += bits[t];
        running -= bits[t - n];
        ++frequency[running];
    }
    return frequency;
}

double binomial_pmf(std::size_t n, std::size_t m, double p) {
    check_probability(p);
    if (m > n) return 0.0;
    if (p == 0.0) return m == 0 ? 1.0 : 0.0;
    if (p == 1.0) return m == n ? 1.0 : 0.0;
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    const double log_choose = std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) -
                              std::lgamma(nd - md + 1.0);
    return std::exp(log_choose + md * std::log(p) + (nd - md) * std::log1p(-p));
}

double sigma_gaussian(std::size_t n, double p) {
    check_probability(p);
    return std::sqrt(static_cast<double>(n) * p * (1.0 - p));
}

double sigma_empirical(const IndicatorSequence& indicator, std::size_t n) {
    const auto frequency = window_count_frequencies(indicator, n);
    const std::size_t positions = indicator.size() - n + 1;
    const double expected = indicator.fraction * static_cast<double>(n);

    // Accumulating over the frequency table (ascending m) makes the result
    // independent of where in the sequence each count occurred.
    double sum = 0.0;
    for (std::size_t m = 0; m < frequency.size(); ++m) {
        if (frequency[m] == 0) continue;
        const double dev = static_cast<double>(m) - expected;
        sum += static_cast<double>(frequency[m]) * dev * dev;
    }
    return std::sqrt(sum / static_cast<double>(positions));
}

double sigma_extreme(std::size_t series_length, std::size_t n, double p) {
    check_probability(p);
    check_window(n, series_length);
    const double length = static_cast<double>(series_length);
    const auto ones = static_cast<std::size_t>(std::llround(p * length));
    if (ones < n || series_length - ones < n) {
        throw InvalidArgumentError("window " + std::to_string(n) +
                                   " exceeds a block of the extreme configuration (N = " +
                                   std::to_string(series_length) + ", marked = " +
                                   std::to_string(ones) + ")");
    }
    const double pe = static_cast<double>(ones) / length;
    const double qe = 1.0 - pe;
    const double nd = static_cast<double>(n);
    const double variance = (nd * nd * (length - nd - 1.0) * pe * qe +
                             nd * (nd + 1.0) * (2.0 * nd + 1.0) / 6.0 -
                             nd * nd * nd * (pe * pe + qe * qe)) /
                            (length - nd + 1.0);
    return std::sqrt(variance);
}

double clustering_index(const IndicatorSequence& indicator, std::size_t n) {
    if (indicator.ones == 0 || indicator.ones == indicator.size()) {
        throw DegenerateInputError(
            "clustering index undefined for an all-0 or all-1 indicator");
    }
    return sigma_empirical(indicator, n) / sigma_gaussian(n, indicator.fraction);
}

double clustering_index(const ReturnSeries& series, double p_pct, std::size_t n, Tail which) {
    return clustering_index(binarize(series, p_pct, which), n);
}

ClusteringProfile clustering_profile(const ReturnSeries& series, double p_pct,
                                     std::size_t n_max, Tail which) {
    check_window(n_max, series.size());
    const auto indicator = binarize(series, p_pct, which);

    ClusteringProfile profile;
    profile.p_pct = p_pct;
    profile.which = which;
    profile.rows.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        ClusteringRow row;
        row.n = n;
        row.sigma_e = sigma_empirical(indicator, n);
        row.sigma_g = sigma_gaussian(n, indicator.fraction);
        row.r_n = row.sigma_e / row.sigma_g;
        row.r_lim = std::sqrt(static_cast<double>(n));
        profile.rows.push_back(row);
    }
    return profile;
}

}  // namespace volclust
