#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "volclust/date.hpp"

namespace volclust {

struct PriceObservation {
    Date date;
    double close = 0.0;
};

/// Daily closing prices in strict date order. Construction sorts by date and
/// enforces: no duplicate dates, every close > 0, length >= 2.
class PriceSeries {
public:
    PriceSeries(std::string symbol, std::vector<PriceObservation> observations);

    const std::string& symbol() const noexcept { return symbol_; }
    const std::vector<PriceObservation>& observations() const noexcept { return observations_; }
    std::size_t size() const noexcept { return observations_.size(); }

private:
    std::string symbol_;
    std::vector<PriceObservation> observations_;
};

struct ReturnObservation {
    Date date;
    double value = 0.0;
};

/// A return series with cached population mean and standard deviation.
/// The moments are always recomputed from the stored values.
class ReturnSeries {
public:
    ReturnSeries(std::string symbol, int tau, std::vector<ReturnObservation> observations);

    const std::string& symbol() const noexcept { return symbol_; }
    int tau() const noexcept { return tau_; }
    const std::vector<ReturnObservation>& observations() const noexcept { return observations_; }
    std::size_t size() const noexcept { return observations_.size(); }

    double mean() const noexcept { return mean_; }
    /// Population convention: divide by N, no Bessel correction.
    double stddev() const noexcept { return stddev_; }

    std::vector<double> values() const;

private:
    std::string symbol_;
    int tau_ = 1;
    std::vector<ReturnObservation> observations_;
    double mean_ = 0.0;
    double stddev_ = 0.0;
};

std::vector<double> absolute_values(const ReturnSeries& series);

}  // namespace volclust
