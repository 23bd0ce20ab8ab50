#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "volclust/series.hpp"

namespace volclust {

/// Normalized difference (a - b) / (a + b); antisymmetric, bounded by +-1
/// for nonnegative inputs.
inline double asymmetry_ratio(double a, double b) { return (a - b) / (a + b); }

/// Asymmetry between the clustering of the largest and smallest p%
/// fluctuations. Zero at n = 1 exactly (both sets have the same size).
double asymmetry_ls(const ReturnSeries& series, double p_pct, std::size_t n);

/// Asymmetry between the clustering of the positive and negative members of
/// the largest p% fluctuations. Each side uses its own realized fraction.
/// Throws DegenerateInputError when the top set is one-sided.
double asymmetry_pm(const ReturnSeries& series, double p_pct, std::size_t n);

struct AsymmetryRow {
    std::size_t n = 0;
    double a_ls = 0.0;
    double a_pm = 0.0;
    double r_l = 0.0;
    double r_s = 0.0;
    double r_plus = 0.0;
    double r_minus = 0.0;
};

struct AsymmetryProfile {
    double p_pct = 0.0;
    std::vector<AsymmetryRow> rows;  // one per n in 1..n_max
};

AsymmetryProfile asymmetry_profile(const ReturnSeries& series, double p_pct, std::size_t n_max);

/// Conditional next-day category probabilities. Rows are conditioning
/// categories, columns outcomes; every row sums to 1.
struct TransitionMatrix {
    std::vector<std::string> labels;           // row = conditioning category
    std::vector<std::string> outcome_labels;   // column = next-day category
    std::vector<std::vector<double>> probs;
    std::vector<std::size_t> support;          // conditioning days per row
};

/// 3x3 matrix over {largest, smallest, rest} at the given p%.
TransitionMatrix transition_matrix(const ReturnSeries& series, double p_pct);

/// 6x6 matrix over {largest, smallest, rest} x {rise, fall}.
/// Sign rule: rise means r > 0, fall means r <= 0.
TransitionMatrix transition_matrix_signed(const ReturnSeries& series, double p_pct);

}  // namespace volclust
