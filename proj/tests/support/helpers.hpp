#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "volclust/rng.hpp"
#include "volclust/series.hpp"
#include "volclust/surrogate.hpp"

namespace volclust::testing {

/// Return series over consecutive dates, for feeding analysis entry points
/// directly in tests.
inline ReturnSeries make_returns(std::vector<double> values, std::string symbol = "TEST") {
    std::vector<ReturnObservation> obs;
    obs.reserve(values.size());
    Date date{2000, 1, 1};
    for (double v : values) {
        obs.push_back(ReturnObservation{date, v});
        date = date.next();
    }
    return ReturnSeries(std::move(symbol), 1, std::move(obs));
}

inline PriceSeries make_prices(std::vector<double> closes, std::string symbol = "TEST") {
    std::vector<PriceObservation> obs;
    obs.reserve(closes.size());
    Date date{2000, 1, 1};
    for (double c : closes) {
        obs.push_back(PriceObservation{date, c});
        date = date.next();
    }
    return PriceSeries(std::move(symbol), std::move(obs));
}

inline IndicatorSequence bernoulli_bits(std::size_t length, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint8_t> bits(length);
    for (auto& b : bits) b = rng.next_unit() < p ? 1 : 0;
    return IndicatorSequence::from_bits(std::move(bits));
}

inline std::vector<double> gaussian_draws(std::size_t length, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> out(length);
    for (auto& v : out) v = rng.next_gaussian();
    return out;
}

}  // namespace volclust::testing
