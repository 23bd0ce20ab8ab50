#include "volclust/series.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "volclust/errors.hpp"

namespace volclust {

PriceSeries::PriceSeries(std::string symbol, std::vector<PriceObservation> observations)
    : symbol_(std::move(symbol)), observations_(std::move(observations)) {
    if (observations_.size() < 2) {
        throw ParseError("price series needs at least 2 observations, got " +
                         std::to_string(observations_.size()));
    }
    std::stable_sort(observations_.begin(), observations_.end(),
                     [](const PriceObservation& a, const PriceObservation& b) {
                         return a.date < b.date;
                     });
    for (std::size_t i = 0; i < observations_.size(); ++i) {
        if (!(observations_[i].close > 0.0)) {
            throw ParseError("non-positive close " + std::to_string(observations_[i].close) +
                             " at " + observations_[i].date.to_string());
        }
        if (i > 0 && observations_[i].date == observations_[i - 1].date) {
            throw ParseError("duplicate date " + observations_[i].date.to_string());
        }
    }
}

ReturnSeries::ReturnSeries(std::string symbol, int tau,
                           std::vector<ReturnObservation> observations)
    : symbol_(std::move(symbol)), tau_(tau), observations_(std::move(observations)) {
    if (tau_ <= 0) throw InvalidArgumentError("tau must be positive");
    if (observations_.empty()) throw DegenerateInputError("empty return series");

    double sum = 0.0;
    for (const auto& obs : observations_) sum += obs.value;
    mean_ = sum / static_cast<double>(observations_.size());

    double sq = 0.0;
    for (const auto& obs : observations_) {
        const double d = obs.value - mean_;
        sq += d * d;
    }
    stddev_ = std::sqrt(sq / static_cast<double>(observations_.size()));
}

std::vector<double> ReturnSeries::values() const {
    std::vector<double> out;
    out.reserve(observations_.size());
    for (const auto& obs : observations_) out.push_back(obs.value);
    return out;
}

std::vector<double> absolute_values(const ReturnSeries& series) {
    std::vector<double> out;
    out.reserve(series.size());
    for (const auto& obs : series.observations()) out.push_back(std::abs(obs.value));
    return out;
}

}  // namespace volclust
