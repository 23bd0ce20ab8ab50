#include "volclust/acf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "volclust/errors.hpp"

namespace volclust {

AcfSeries acf(std::span<const double> x, std::size_t max_lag) {
    if (max_lag == 0) throw InvalidArgumentError("max_lag must be positive");
    if (x.size() < max_lag + 2) {
        throw InvalidArgumentError("max_lag " + std::to_string(max_lag) +
                                   " too large for a sequence of length " +
                                   std::to_string(x.size()));
    }
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (*lo == *hi) throw DegenerateInputError("constant sequence has no autocorrelation");

    AcfSeries out;
    out.n_obs = x.size();
    out.noise_band = 1.96 / std::sqrt(static_cast<double>(x.size()));
    out.values.resize(max_lag + 1);
    out.values[0] = 1.0;

    for (std::size_t lag = 1; lag <= max_lag; ++lag) {
        const std::size_t m = x.size() - lag;
        double mean_head = 0.0;
        double mean_tail = 0.0;
        for (std::size_t t = 0; t < m; ++t) {
            mean_head += x[t];
            mean_tail += x[t + lag];
        }
        mean_head /= static_cast<double>(m);
        mean_tail /= static_cast<double>(m);

        double cov = 0.0;
        double var_head = 0.0;
        double var_tail = 0.0;
        for (std::size_t t = 0; t < m; ++t) {
            const double a = x[t] - mean_head;
            const double b = x[t + lag] - mean_tail;
            cov += a * b;
            var_head += a * a;
            var_tail += b * b;
        }
        if (var_head <= 0.0 || var_tail <= 0.0) {
            throw DegenerateInputError("zero variance in the overlap at lag " +
                                       std::to_string(lag));
        }
        const double r = cov / (std::sqrt(var_head) * std::sqrt(var_tail));
        out.values[lag] = std::clamp(r, -1.0, 1.0);
    }
    return out;
}

}  // namespace volclust
