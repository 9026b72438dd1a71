#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace calgrid::civil {

// Whether weekday index 1 means Monday or Sunday. The convention is carried
// explicitly everywhere a weekday number appears; nothing downstream assumes
// a default.
enum class WeekStart { monday, sunday };

// Proleptic Gregorian calendar date. Supported range 1583-01-01 to
// 9999-12-31; dates before the Gregorian reform are rejected.
struct Date {
    int year = 1583;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;
};

inline constexpr Date min_date{1583, 1, 1};
inline constexpr Date max_date{9999, 12, 31};

bool is_leap_year(int year);

// Throws std::invalid_argument for month outside [1,12].
int days_in_month(int year, int month);

bool is_valid(const Date& d);

// Days since 1970-01-01 (negative before the epoch).
long day_number(const Date& d);

// Weekday index in [1,7] under the given week start: Monday=1..Sunday=7 when
// the week starts Monday, Sunday=1..Saturday=7 when it starts Sunday.
int day_of_week(const Date& d, WeekStart start);

// Chronological successor. Throws std::out_of_range past max_date.
Date next_day(const Date& d);

// Strict ISO-8601 YYYY-MM-DD. Throws ParseError on malformed or invalid
// input, including dates outside the supported range.
Date parse_iso_date(std::string_view text);

std::string to_iso_string(const Date& d);

} // namespace calgrid::civil
