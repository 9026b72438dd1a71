#include "calgrid/scale.hpp"

#include "calgrid/errors.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <utility>

namespace calgrid::scale {

namespace {

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    bool seen = false;

    void add(double v) {
        if (std::isnan(v))
            return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        seen = true;
    }

    double scaled(double v) const {
        if (std::isnan(v))
            return v;
        if (hi == lo)
            return 0.5;
        return (v - lo) / (hi - lo);
    }
};

} // namespace

std::vector<double> rescale01(std::span<const double> values) {
    Range range;
    for (double v : values)
        range.add(v);
    if (!range.seen)
        throw EmptyDomainError("rescale01: no non-missing values");
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values)
        out.push_back(range.scaled(v));
    return out;
}

Scaled apply_scale(std::span<const civil::Date> dates, std::span<const double> x,
                   std::span<const double> y, Mode mode, civil::WeekStart start) {
    Scaled result;
    result.h = rescale01(x);

    if (mode == Mode::fixed) {
        result.c = rescale01(y);
        return result;
    }

    // Key each row into its scaling group, take group-wise ranges, then map.
    const auto key_of = [&](std::size_t row) -> long {
        const civil::Date& d = dates[row];
        switch (mode) {
        case Mode::free:
            return civil::day_number(d);
        case Mode::free_wday:
            return civil::day_of_week(d, start);
        case Mode::free_mday:
            return d.day;
        default:
            return 0;
        }
    };

    std::map<long, Range> groups;
    for (std::size_t row = 0; row < y.size(); ++row)
        groups[key_of(row)].add(y[row]);

    for (const auto& [key, range] : groups) {
        if (!range.seen)
            throw EmptyDomainError("apply_scale: scaling group " + std::to_string(key) +
                                   " has no non-missing values");
    }

    result.c.reserve(y.size());
    for (std::size_t row = 0; row < y.size(); ++row)
        result.c.push_back(groups[key_of(row)].scaled(y[row]));
    return result;
}

} // namespace calgrid::scale
