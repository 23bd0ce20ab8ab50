#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "volclust/surrogate.hpp"

namespace volclust {

/// Moving-window counts of marked days: one entry per window position.
struct WindowCountDistribution {
    std::size_t window = 0;                  // n
    std::vector<std::uint32_t> counts;       // size N - n + 1
    std::vector<std::uint64_t> frequency;    // index m in 0..n -> occurrences
};

/// Scan an n-day moving window over the indicator and count marked days at
/// every position. O(N) rolling update.
WindowCountDistribution window_counts(const IndicatorSequence& indicator, std::size_t n);

/// Same scan, but only the frequency table (no per-position counts stored).
std::vector<std::uint64_t> window_count_frequencies(const IndicatorSequence& indicator,
                                                    std::size_t n);

/// Binomial(n, p) probability of m marked days; log-space evaluation so
/// large n does not overflow.
double binomial_pmf(std::size_t n, std::size_t m, double p);

/// Closed-form stddev of the window count for an iid marking: sqrt(n p (1-p)).
double sigma_gaussian(std::size_t n, double p);

/// Empirical window-count stddev, deviations taken from the theoretical
/// mean P*n (so the n = 1 index is exactly 1 for any indicator).
double sigma_empirical(const IndicatorSequence& indicator, std::size_t n);

/// Window-count stddev of the maximal-clustering configuration: all k
/// marked days in one block, the rest in another. Closed form in
/// (N, n, P); P*N is rounded to the nearest integer block size.
/// Approaches sqrt(n^2 P (1-P)) as N grows.
double sigma_extreme(std::size_t series_length, std::size_t n, double p);

/// Clustering index R_n = sigma_empirical / sigma_gaussian at the
/// indicator's realized fraction. 1 for iid markings, sqrt(n) at maximal
/// clustering.
double clustering_index(const IndicatorSequence& indicator, std::size_t n);
double clustering_index(const ReturnSeries& series, double p_pct, std::size_t n, Tail which);

struct ClusteringRow {
    std::size_t n = 0;
    double sigma_e = 0.0;
    double sigma_g = 0.0;
    double r_n = 0.0;
    double r_lim = 0.0;  // sqrt(n)
};

struct ClusteringProfile {
    double p_pct = 0.0;
    Tail which = Tail::largest;
    std::vector<ClusteringRow> rows;  // one per n in 1..n_max
};

ClusteringProfile clustering_profile(const ReturnSeries& series, double p_pct,
                                     std::size_t n_max, Tail which);

}  // namespace volclust
