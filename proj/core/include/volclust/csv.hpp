#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "volclust/series.hpp"

namespace volclust {

/// Parse `date,close` CSV text. Rows are sorted by date if the input is
/// unsorted. Throws ParseError (with line number) on malformed rows,
/// non-positive closes, duplicate dates, or fewer than 2 rows.
PriceSeries parse_price_csv(std::string_view text, std::string symbol);

/// Read a file and parse it with parse_price_csv.
PriceSeries load_price_csv(const std::filesystem::path& file, std::string symbol);

/// Inverse of parse_price_csv: closes are written in shortest round-trip
/// form, so parse(write(s)) reproduces the series bit for bit.
std::string to_price_csv(const PriceSeries& series);

/// `date,value` CSV for return and surrogate series.
std::string to_return_csv(const ReturnSeries& series);

}  // namespace volclust
