#include <cmath>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "volclust/acf.hpp"
#include "volclust/errors.hpp"
#include "volclust/histogram.hpp"
#include "volclust/returns.hpp"
#include "volclust/surrogate.hpp"

using namespace volclust;
using volclust::testing::gaussian_draws;
using volclust::testing::make_returns;

TEST_CASE("acf at lag 0 is exactly 1") {
    const auto result = acf(gaussian_draws(500, 3), 20);
    CHECK(result.values[0] == 1.0);
}

TEST_CASE("acf of an alternating sequence is -1 at lag 1") {
    std::vector<double> x(100);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = i % 2 == 0 ? 1.0 : -1.0;
    const auto result = acf(x, 3);
    CHECK(result.values[1] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(result.values[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("acf values stay within [-1, 1]") {
    const auto result = acf(gaussian_draws(2000, 11), 100);
    for (double v : result.values) {
        CHECK(v <= 1.0);
        CHECK(v >= -1.0);
    }
}

TEST_CASE("acf of iid noise stays inside the 95% band") {
    const auto x = gaussian_draws(10000, 42);
    const auto result = acf(x, 100);
    CHECK(result.noise_band == doctest::Approx(1.96 / std::sqrt(10000.0)));
    std::size_t inside = 0;
    for (std::size_t lag = 1; lag <= 100; ++lag) {
        if (std::abs(result.values[lag]) < result.noise_band) ++inside;
    }
    CHECK(inside >= 95);
}

TEST_CASE("acf is invariant under positive affine transforms") {
    const auto x = gaussian_draws(3000, 7);
    std::vector<double> y;
    for (double v : x) y.push_back(1.75 * v + 0.3);
    const auto ax = acf(x, 50);
    const auto ay = acf(y, 50);
    for (std::size_t lag = 0; lag <= 50; ++lag) {
        CHECK(std::abs(ax.values[lag] - ay.values[lag]) <= 1e-10);
    }
}

TEST_CASE("acf input validation") {
    CHECK_THROWS_AS(acf(std::vector<double>{1, 1, 1, 1}, 2), DegenerateInputError);
    CHECK_THROWS_AS(acf(std::vector<double>{1, 2, 3}, 2), InvalidArgumentError);
    CHECK_THROWS_AS(acf(std::vector<double>{1, 2, 3, 4}, 0), InvalidArgumentError);
}

TEST_CASE("shuffling kills the |return| autocorrelation") {
    // Strongly clustered magnitudes: the |value| ACF of the original is far
    // outside the band, the shuffled one is white.
    std::vector<double> values;
    Rng rng(5);
    for (int block = 0; block < 100; ++block) {
        const double scale = block % 2 == 0 ? 0.02 : 0.001;
        for (int i = 0; i < 50; ++i) values.push_back(scale * rng.next_gaussian());
    }
    const auto rs = make_returns(values);
    const auto shuffled = shuffle(rs, 99);

    const auto original = acf(absolute_values(rs), 100);
    std::size_t original_outside = 0;
    for (std::size_t lag = 1; lag <= 100; ++lag) {
        if (std::abs(original.values[lag]) >= original.noise_band) ++original_outside;
    }
    CHECK(original_outside > 50);

    const auto white = acf(absolute_values(shuffled), 100);
    std::size_t inside = 0;
    for (std::size_t lag = 1; lag <= 100; ++lag) {
        if (std::abs(white.values[lag]) < white.noise_band) ++inside;
    }
    CHECK(inside >= 95);
}

TEST_CASE("histogram of two points") {
    const auto h = histogram_pdf(make_returns({-1.0, 1.0}), 2);
    REQUIRE(h.densities.size() == 2);
    const double width = h.bin_edges[1] - h.bin_edges[0];
    CHECK(h.densities[0] == doctest::Approx(0.5 / width).epsilon(1e-12));
    CHECK(h.densities[1] == doctest::Approx(0.5 / width).epsilon(1e-12));
}

TEST_CASE("histogram mass is 1") {
    const auto normalized = normalize_returns(make_returns(gaussian_draws(5000, 23)));
    for (std::size_t bins : {2, 7, 50, 111}) {
        const auto h = histogram_pdf(normalized, bins);
        double mass = 0.0;
        for (std::size_t i = 0; i < h.densities.size(); ++i) {
            mass += h.densities[i] * (h.bin_edges[i + 1] - h.bin_edges[i]);
        }
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("histogram of seeded normal draws tracks the reference curve") {
    const auto normalized = normalize_returns(make_returns(gaussian_draws(100000, 12345)));
    const auto h = histogram_pdf(normalized, 50);
    double worst = 0.0;
    for (std::size_t i = 0; i < h.densities.size(); ++i) {
        worst = std::max(worst, std::abs(h.densities[i] - h.reference[i]));
    }
    CHECK(worst < 0.02);
}

TEST_CASE("histogram argument errors") {
    CHECK_THROWS_AS(histogram_pdf(make_returns({-1.0, 1.0}), 1), InvalidArgumentError);
    // Not normalized: mean far from 0.
    CHECK_THROWS_AS(histogram_pdf(make_returns({5.0, 7.0}), 2), InvalidArgumentError);
}
