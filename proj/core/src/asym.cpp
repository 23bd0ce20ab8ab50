#include "volclust/asym.hpp"

#include <array>
#include <utility>

#include "volclust/cluster.hpp"
#include "volclust/errors.hpp"
#include "volclust/surrogate.hpp"

namespace volclust {

namespace {

/// Positive and negative members of the largest p% fluctuation set, each as
/// its own indicator with its own realized fraction.
std::pair<IndicatorSequence, IndicatorSequence> signed_extreme_indicators(
    const ReturnSeries& series, double p_pct) {
    const auto selection = select_extremes(series, p_pct);
    const auto& obs = series.observations();
    std::vector<std::uint8_t> positive(series.size(), 0);
    std::vector<std::uint8_t> negative(series.size(), 0);
    for (std::size_t idx : selection.largest) {
        (obs[idx].value > 0.0 ? positive : negative)[idx] = 1;
    }
    auto pos_seq = IndicatorSequence::from_bits(std::move(positive));
    auto neg_seq = IndicatorSequence::from_bits(std::move(negative));
    if (pos_seq.ones == 0 || neg_seq.ones == 0) {
        throw DegenerateInputError("largest " + std::to_string(p_pct) +
                                   "% set is one-sided; +/- asymmetry undefined");
    }
    return {std::move(pos_seq), std::move(neg_seq)};
}

/// Day categories: 0 = largest, 1 = smallest, 2 = rest.
std::vector<int> categorize(const ReturnSeries& series, double p_pct) {
    const auto selection = select_extremes(series, p_pct);
    std::vector<int> category(series.size(), 2);
    for (std::size_t idx : selection.largest) category[idx] = 0;
    for (std::size_t idx : selection.smallest) category[idx] = 1;
    return category;
}

TransitionMatrix normalize_counts(std::vector<std::string> labels,
                                  std::vector<std::string> outcome_labels,
                                  const std::vector<std::vector<std::size_t>>& counts) {
    TransitionMatrix tm;
    tm.labels = std::move(labels);
    tm.outcome_labels = std::move(outcome_labels);
    tm.probs.resize(counts.size());
    tm.support.resize(counts.size());
    for (std::size_t row = 0; row < counts.size(); ++row) {
        std::size_t total = 0;
        for (std::size_t c : counts[row]) total += c;
        if (total == 0) {
            throw DegenerateInputError("empty conditioning category '" + tm.labels[row] + "'");
        }
        tm.support[row] = total;
        tm.probs[row].reserve(counts[row].size());
        for (std::size_t c : counts[row]) {
            tm.probs[row].push_back(static_cast<double>(c) / static_cast<double>(total));
        }
    }
    return tm;
}

}  // namespace

double asymmetry_ls(const ReturnSeries& series, double p_pct, std::size_t n) {
    const double r_largest = clustering_index(series, p_pct, n, Tail::largest);
    const double r_smallest = clustering_index(series, p_pct, n, Tail::smallest);
    return asymmetry_ratio(r_largest, r_smallest);
}

double asymmetry_pm(const ReturnSeries& series, double p_pct, std::size_t n) {
    const auto [positive, negative] = signed_extreme_indicators(series, p_pct);
    return asymmetry_ratio(clustering_index(positive, n), clustering_index(negative, n));
}

AsymmetryProfile asymmetry_profile(const ReturnSeries& series, double p_pct, std::size_t n_max) {
    const auto largest = binarize(series, p_pct, Tail::largest);
    const auto smallest = binarize(series, p_pct, Tail::smallest);
    const auto [positive, negative] = signed_extreme_indicators(series, p_pct);

    AsymmetryProfile profile;
    profile.p_pct = p_pct;
    profile.rows.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        AsymmetryRow row;
        row.n = n;
        row.r_l = clustering_index(largest, n);
        row.r_s = clustering_index(smallest, n);
        row.r_plus = clustering_index(positive, n);
        row.r_minus = clustering_index(negative, n);
        row.a_ls = asymmetry_ratio(row.r_l, row.r_s);
        row.a_pm = asymmetry_ratio(row.r_plus, row.r_minus);
        profile.rows.push_back(row);
    }
    return profile;
}

TransitionMatrix transition_matrix(const ReturnSeries& series, double p_pct) {
    if (series.size() < 2) throw DegenerateInputError("need at least 2 observations");
    const auto category = categorize(series, p_pct);

    std::vector<std::vector<std::size_t>> counts(3, std::vector<std::size_t>(3, 0));
    for (std::size_t t = 0; t + 1 < category.size(); ++t) {
        ++counts[static_cast<std::size_t>(category[t])]
                [static_cast<std::size_t>(category[t + 1])];
    }
    std::vector<std::string> labels = {"largest", "smallest", "rest"};
    return normalize_counts(labels, labels, counts);
}

TransitionMatrix transition_matrix_signed(const ReturnSeries& series, double p_pct) {
    if (series.size() < 2) throw DegenerateInputError("need at least 2 observations");
    const auto category = categorize(series, p_pct);
    const auto& obs = series.observations();

    // rise = r > 0, fall = r <= 0: zeros fold into "fall" so the six
    // categories stay a partition.
    std::vector<std::size_t> signed_category(series.size());
    for (std::size_t t = 0; t < series.size(); ++t) {
        signed_category[t] =
            static_cast<std::size_t>(category[t]) * 2 + (obs[t].value > 0.0 ? 0 : 1);
    }

    std::vector<std::vector<std::size_t>> counts(6, std::vector<std::size_t>(6, 0));
    for (std::size_t t = 0; t + 1 < signed_category.size(); ++t) {
        ++counts[signed_category[t]][signed_category[t + 1]];
    }
    std::vector<std::string> labels = {"largest_rise", "largest_fall", "smallest_rise",
                                       "smallest_fall", "rest_rise",   "rest_fall"};
    return normalize_counts(labels, labels, counts);
}

}  // namespace volclust
