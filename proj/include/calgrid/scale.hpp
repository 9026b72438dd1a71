#pragma once

#include "calgrid/civil.hpp"

#include <span>
#include <vector>

namespace calgrid::scale {

// Scope of the value (y) rescaling. The within-day position (x) is always
// scaled over the whole table so every cell shares one time axis.
enum class Mode { fixed, free, free_wday, free_mday };

// Min-max rescale to [0,1]. NaN marks a missing value and passes through
// untouched; a degenerate range maps every present value to 0.5. Throws
// EmptyDomainError when no value is present at all.
std::vector<double> rescale01(std::span<const double> values);

struct Scaled {
    std::vector<double> h; // scaled x, global
    std::vector<double> c; // scaled y, grouped per mode
};

// Rescales x globally and y within the groups the mode dictates: the whole
// table (fixed), one date (free), one weekday cohort (free_wday), or one
// day-of-month cohort (free_mday).
Scaled apply_scale(std::span<const civil::Date> dates, std::span<const double> x,
                   std::span<const double> y, Mode mode, civil::WeekStart start);

} // namespace calgrid::scale
