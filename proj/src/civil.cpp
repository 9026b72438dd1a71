#include "calgrid/civil.hpp"

#include "calgrid/errors.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

namespace calgrid::civil {

bool is_leap_year(int year) {
    return year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
}

int days_in_month(int year, int month) {
    static constexpr std::array<int, 13> lengths{0, 31, 28, 31, 30, 31, 30,
                                                 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12)
        throw std::invalid_argument("days_in_month: month " + std::to_string(month) +
                                    " out of range [1,12]");
    if (month == 2 && is_leap_year(year))
        return 29;
    return lengths[static_cast<std::size_t>(month)];
}

bool is_valid(const Date& d) {
    if (d.year < min_date.year || d.year > max_date.year)
        return false;
    if (d.month < 1 || d.month > 12)
        return false;
    return d.day >= 1 && d.day <= days_in_month(d.year, d.month);
}

long day_number(const Date& d) {
    // Era-based civil day count, epoch 1970-01-01.
    int y = d.year;
    const int m = d.month;
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy =
        static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d.day - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<long>(era) * 146097 + static_cast<long>(doe) - 719468;
}

int day_of_week(const Date& d, WeekStart start) {
    // 1970-01-01 is a Thursday: day_number 0 must map to index 4 (Monday
    // start) and 5 (Sunday start).
    const long n = day_number(d);
    const long shift = start == WeekStart::monday ? 3 : 4;
    return static_cast<int>(((n + shift) % 7 + 7) % 7) + 1;
}

Date next_day(const Date& d) {
    if (d == max_date)
        throw std::out_of_range("next_day: past supported range 9999-12-31");
    Date r = d;
    if (r.day < days_in_month(r.year, r.month)) {
        ++r.day;
        return r;
    }
    r.day = 1;
    if (r.month < 12) {
        ++r.month;
        return r;
    }
    r.month = 1;
    ++r.year;
    return r;
}

Date parse_iso_date(std::string_view text) {
    const auto fail = [&] {
        throw ParseError("invalid date '" + std::string(text) +
                         "' (expected YYYY-MM-DD)");
    };
    if (text.size() != 10 || text[4] != '-' || text[7] != '-')
        fail();
    int fields[3] = {0, 0, 0};
    const int spans[3][2] = {{0, 4}, {5, 2}, {8, 2}};
    for (int f = 0; f < 3; ++f) {
        int v = 0;
        for (int p = 0; p < spans[f][1]; ++p) {
            const char ch = text[static_cast<std::size_t>(spans[f][0] + p)];
            if (ch < '0' || ch > '9')
                fail();
            v = v * 10 + (ch - '0');
        }
        fields[f] = v;
    }
    const Date d{fields[0], fields[1], fields[2]};
    if (!is_valid(d))
        throw ParseError("invalid date '" + std::string(text) +
                         "' (out of range or no such day)");
    return d;
}

std::string to_iso_string(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

} // namespace calgrid::civil
