#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace volclust::testing {

std::vector<double> pascal_row(std::size_t n) {
    std::vector<double> row = {1.0};
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<double> next(i + 1, 1.0);
        for (std::size_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row;
}

double binomial_sigma_bruteforce(std::size_t n, double p) {
    const auto choose = pascal_row(n);
    const double expected = p * static_cast<double>(n);
    double sum = 0.0;
    for (std::size_t m = 0; m <= n; ++m) {
        const double dev = static_cast<double>(m) - expected;
        sum += dev * dev * choose[m] * std::pow(p, static_cast<double>(m)) *
               std::pow(1.0 - p, static_cast<double>(n - m));
    }
    return std::sqrt(sum);
}

double window_sigma_direct(std::span<const std::uint8_t> bits, std::size_t n,
                           double expected_mean) {
    if (n == 0 || n > bits.size()) throw std::invalid_argument("bad window");
    const std::size_t positions = bits.size() - n + 1;
    double acc = 0.0;
    for (std::size_t t = 0; t < positions; ++t) {
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i) count += bits[t + i];
        const double dev = static_cast<double>(count) - expected_mean;
        acc += dev * dev;
    }
    return std::sqrt(acc / static_cast<double>(positions));
}

std::vector<std::uint8_t> block_bits(std::size_t length, std::size_t ones) {
    std::vector<std::uint8_t> bits(length, 0);
    std::fill(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(ones), std::uint8_t{1});
    return bits;
}

namespace {

std::vector<double> average_ranks(std::span<const double> x) {
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(x.size(), 0.0);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
        const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

double spearman(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2) throw std::invalid_argument("bad spearman input");
    const auto ra = average_ranks(a);
    const auto rb = average_ranks(b);
    const double n = static_cast<double>(a.size());
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mean_a += ra[i];
        mean_b += rb[i];
    }
    mean_a /= n;
    mean_b /= n;
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = ra[i] - mean_a;
        const double db = rb[i] - mean_b;
        cov += da * db;
        va += da * da;
        vb += db * db;
    }
    return cov / std::sqrt(va * vb);
}

}  // namespace volclust::testing
