#include "volclust/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "volclust/errors.hpp"
#include "volclust/rng.hpp"

namespace volclust {

namespace {

/// Indices ordered by descending |value|; ties go to the earlier date.
std::vector<std::size_t> rank_by_magnitude(const std::vector<ReturnObservation>& obs) {
    std::vector<std::size_t> order(obs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(obs[a].value) > std::abs(obs[b].value);
    });
    return order;
}

void check_p_pct(double p_pct) {
    if (!(p_pct >= 0.0) || p_pct > 50.0) {
        throw InvalidArgumentError("p_pct must lie in [0, 50], got " + std::to_string(p_pct));
    }
}

}  // namespace

IndicatorSequence IndicatorSequence::from_bits(std::vector<std::uint8_t> bits) {
    IndicatorSequence seq;
    seq.ones = 0;
    for (std::uint8_t b : bits) {
        if (b > 1) throw InvalidArgumentError("indicator bits must be 0 or 1");
        seq.ones += b;
    }
    seq.fraction = bits.empty() ? 0.0
                                : static_cast<double>(seq.ones) / static_cast<double>(bits.size());
    seq.bits = std::move(bits);
    return seq;
}

std::size_t extreme_count(std::size_t n, double p_pct) {
    check_p_pct(p_pct);
    const auto k = static_cast<std::size_t>(
        std::llround(p_pct / 100.0 * static_cast<double>(n)));
    // Rounding p = 50 up on an odd length would make the two tails overlap.
    return std::min(k, n / 2);
}

ReturnSeries gaussian_surrogate(const ReturnSeries& series, std::uint64_t seed) {
    if (!(series.stddev() > 0.0)) {
        throw DegenerateInputError("gaussian surrogate of a zero-variance series");
    }
    Rng rng(seed);
    std::vector<ReturnObservation> out;
    out.reserve(series.size());
    for (const auto& obs : series.observations()) {
        out.push_back(
            ReturnObservation{obs.date, series.mean() + series.stddev() * rng.next_gaussian()});
    }
    return ReturnSeries(series.symbol(), series.tau(), std::move(out));
}

ReturnSeries rank_rearrange(const ReturnSeries& empirical, const ReturnSeries& surrogate) {
    if (empirical.size() != surrogate.size()) {
        throw InvalidArgumentError("length mismatch: " + std::to_string(empirical.size()) +
                                   " vs " + std::to_string(surrogate.size()));
    }
    const auto empirical_order = rank_by_magnitude(empirical.observations());

    std::vector<double> surrogate_sorted = surrogate.values();
    std::stable_sort(surrogate_sorted.begin(), surrogate_sorted.end(),
                     [](double a, double b) { return std::abs(a) > std::abs(b); });

    std::vector<ReturnObservation> out(empirical.observations());
    for (std::size_t rank = 0; rank < out.size(); ++rank) {
        out[empirical_order[rank]].value = surrogate_sorted[rank];
    }
    return ReturnSeries(empirical.symbol(), empirical.tau(), std::move(out));
}

ReturnSeries shuffle(const ReturnSeries& series, std::uint64_t seed) {
    std::vector<ReturnObservation> out(series.observations());
    Rng rng(seed);
    for (std::size_t i = out.size(); i > 1; --i) {
        const std::size_t j = rng.next_below(i);
        std::swap(out[i - 1].value, out[j].value);
    }
    return ReturnSeries(series.symbol(), series.tau(), std::move(out));
}

ReturnSeries swap_extremes(const ReturnSeries& series, double p_pct) {
    check_p_pct(p_pct);
    const std::size_t k = extreme_count(series.size(), p_pct);

    std::vector<ReturnObservation> out(series.observations());
    if (k == 0) return ReturnSeries(series.symbol(), series.tau(), std::move(out));

    const auto order = rank_by_magnitude(series.observations());
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t big = order[j];
        const std::size_t small = order[order.size() - 1 - j];
        std::swap(out[big].value, out[small].value);
    }
    return ReturnSeries(series.symbol(), series.tau(), std::move(out));
}

ExtremeSelection select_extremes(const ReturnSeries& series, double p_pct) {
    if (!(p_pct > 0.0)) throw InvalidArgumentError("p_pct must be positive");
    check_p_pct(p_pct);
    const std::size_t k = extreme_count(series.size(), p_pct);
    if (k == 0) {
        throw DegenerateInputError("selection is empty after rounding (p_pct = " +
                                   std::to_string(p_pct) + ", N = " +
                                   std::to_string(series.size()) + ")");
    }
    const auto order = rank_by_magnitude(series.observations());

    // Both tails are cut from the same total order (|value| desc, earlier
    // date first among ties), so they cannot overlap while 2k <= N.
    ExtremeSelection sel;
    sel.p_pct = p_pct;
    sel.largest.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    sel.smallest.assign(order.rbegin(), order.rbegin() + static_cast<std::ptrdiff_t>(k));
    return sel;
}

IndicatorSequence binarize(const ReturnSeries& series, double p_pct, Tail which) {
    const auto sel = select_extremes(series, p_pct);
    const auto& chosen = which == Tail::largest ? sel.largest : sel.smallest;
    std::vector<std::uint8_t> bits(series.size(), 0);
    for (std::size_t idx : chosen) bits[idx] = 1;
    return IndicatorSequence::from_bits(std::move(bits));
}

}  // namespace volclust
