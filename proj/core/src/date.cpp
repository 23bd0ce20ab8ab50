#include "volclust/date.hpp"

#include <array>
#include <cstdio>

#include "volclust/errors.hpp"

namespace volclust {

namespace {

bool is_leap_year(std::int32_t year) {
    return year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
}

unsigned days_in_month(std::int32_t year, unsigned month) {
    static constexpr std::array<unsigned, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                       31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap_year(year)) return 29;
    return kDays[month - 1];
}

bool all_digits(std::string_view s) {
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return !s.empty();
}

int to_int(std::string_view s) {
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

}  // namespace

bool Date::is_valid(std::int32_t year, unsigned month, unsigned day) {
    if (month < 1 || month > 12) return false;
    if (day < 1 || day > days_in_month(year, month)) return false;
    return true;
}

Date Date::parse(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        !all_digits(text.substr(0, 4)) || !all_digits(text.substr(5, 2)) ||
        !all_digits(text.substr(8, 2))) {
        throw ParseError("expected ISO date YYYY-MM-DD, got '" + std::string(text) + "'");
    }
    const int year = to_int(text.substr(0, 4));
    const int month = to_int(text.substr(5, 2));
    const int day = to_int(text.substr(8, 2));
    if (!is_valid(year, static_cast<unsigned>(month), static_cast<unsigned>(day))) {
        throw ParseError("impossible calendar day '" + std::string(text) + "'");
    }
    return Date{year, static_cast<std::uint8_t>(month), static_cast<std::uint8_t>(day)};
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", year, static_cast<unsigned>(month),
                  static_cast<unsigned>(day));
    return buf;
}

Date Date::next() const {
    Date d = *this;
    if (d.day < days_in_month(d.year, d.month)) {
        ++d.day;
    } else if (d.month < 12) {
        ++d.month;
        d.day = 1;
    } else {
        ++d.year;
        d.month = 1;
        d.day = 1;
    }
    return d;
}

}  // namespace volclust
