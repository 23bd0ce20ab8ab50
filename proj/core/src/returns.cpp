#include "volclust/returns.hpp"

#include "volclust/errors.hpp"

namespace volclust {

ReturnSeries compute_returns(const PriceSeries& prices, int tau) {
    if (tau <= 0) throw InvalidArgumentError("tau must be positive, got " + std::to_string(tau));
    if (static_cast<std::size_t>(tau) >= prices.size()) {
        throw InvalidArgumentError("tau " + std::to_string(tau) +
                                   " must be smaller than the series length " +
                                   std::to_string(prices.size()));
    }
    const auto& obs = prices.observations();
    std::vector<ReturnObservation> values;
    values.reserve(prices.size() - static_cast<std::size_t>(tau));
    for (std::size_t t = static_cast<std::size_t>(tau); t < obs.size(); ++t) {
        const double previous = obs[t - static_cast<std::size_t>(tau)].close;
        values.push_back(ReturnObservation{obs[t].date, (obs[t].close - previous) / previous});
    }
    return ReturnSeries(prices.symbol(), tau, std::move(values));
}

ReturnSeries normalize_returns(const ReturnSeries& series) {
    if (!(series.stddev() > 0.0)) {
        throw DegenerateInputError("cannot normalize a zero-variance return series");
    }
    const double mu = series.mean();
    const double sigma = series.stddev();
    std::vector<ReturnObservation> values;
    values.reserve(series.size());
    for (const auto& obs : series.observations()) {
        values.push_back(ReturnObservation{obs.date, (obs.value - mu) / sigma});
    }
    return ReturnSeries(series.symbol(), series.tau(), std::move(values));
}

}  // namespace volclust
