#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace volclust {

/// ISO-8601 calendar day. Ordering is lexicographic on (year, month, day).
struct Date {
    std::int32_t year = 1970;
    std::uint8_t month = 1;
    std::uint8_t day = 1;

    friend auto operator<=>(const Date&, const Date&) = default;

    /// Parse strict `YYYY-MM-DD`. Throws ParseError on malformed text or an
    /// impossible calendar day.
    static Date parse(std::string_view text);

    static bool is_valid(std::int32_t year, unsigned month, unsigned day);

    std::string to_string() const;

    /// Next calendar day, rolling over months and years.
    Date next() const;
};

}  // namespace volclust
