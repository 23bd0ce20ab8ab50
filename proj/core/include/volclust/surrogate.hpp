#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "volclust/series.hpp"

namespace volclust {

/// Which end of the |return| ranking a selection refers to.
enum class Tail { largest, smallest };

/// 0/1 marking of an extreme-fluctuation subset.
struct IndicatorSequence {
    std::vector<std::uint8_t> bits;
    std::size_t ones = 0;     // k
    double fraction = 0.0;    // P = k / N

    std::size_t size() const noexcept { return bits.size(); }

    static IndicatorSequence from_bits(std::vector<std::uint8_t> bits);
};

/// Index sets of the largest and smallest p% by |return|, each in rank
/// order (largest[0] is the single biggest fluctuation). Ties in |return|
/// are broken by earlier date.
struct ExtremeSelection {
    std::vector<std::size_t> largest;
    std::vector<std::size_t> smallest;
    double p_pct = 0.0;

    std::size_t count() const noexcept { return largest.size(); }
};

/// Number of marked days for a p% selection: round(p/100 * N), capped at
/// N/2 so the largest and smallest sets stay disjoint for p <= 50.
std::size_t extreme_count(std::size_t n, double p_pct);

/// iid draws from Normal(mean, stddev) of the input series, same dates.
ReturnSeries gaussian_surrogate(const ReturnSeries& series, std::uint64_t seed);

/// Sort both series by descending |value| and place the surrogate value of
/// rank j at the time position of the empirical value of rank j. Surrogate
/// values keep their own sign; output dates are the empirical dates.
ReturnSeries rank_rearrange(const ReturnSeries& empirical, const ReturnSeries& surrogate);

/// Uniform random permutation of the values (Fisher-Yates); dates stay put.
ReturnSeries shuffle(const ReturnSeries& series, std::uint64_t seed);

/// Exchange the value at the position of the j-th largest |return| with the
/// value at the position of the j-th smallest, j = 1..k. Involution.
ReturnSeries swap_extremes(const ReturnSeries& series, double p_pct);

ExtremeSelection select_extremes(const ReturnSeries& series, double p_pct);

IndicatorSequence binarize(const ReturnSeries& series, double p_pct, Tail which);

}  // namespace volclust
