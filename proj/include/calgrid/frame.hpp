#pragma once

#include "calgrid/civil.hpp"
#include "calgrid/decor.hpp"
#include "calgrid/layout.hpp"
#include "calgrid/scale.hpp"
#include "calgrid/table.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace calgrid {

enum class CalendarType { monthly, weekly, daily };

// Full option surface of the layout. Defaults match the library's public
// contract: monthly, horizontal, Monday week start, global scaling, glyphs
// filling 95% of their cell, 0.3-cell gaps between month blocks.
struct CalendarSpec {
    CalendarType calendar = CalendarType::monthly;
    layout::Direction dir = layout::Direction::horizontal;
    bool sunday = false;
    std::optional<int> nrow;
    std::optional<int> ncol;
    bool polar = false;
    scale::Mode scale_mode = scale::Mode::fixed;
    double width = 0.95;
    double height = 0.95;
    std::optional<double> margin; // block gap b; 0.3 when unset

    civil::WeekStart week_start() const {
        return sunday ? civil::WeekStart::sunday : civil::WeekStart::monday;
    }
    double gap() const { return margin.value_or(0.3); }
};

struct Extents {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
};

struct Decorations {
    std::vector<decor::Segment> segments;
    std::vector<decor::LabelAnchor> labels;
};

// The augmented table: one (x_cal, y_cal) per input row (NaN where y was
// missing), the per-row cell address, and everything a renderer needs.
struct LayoutFrame {
    io::TidyTable table;
    std::vector<double> x_cal;
    std::vector<double> y_cal;
    std::vector<layout::CellAddress> cells;
    Decorations decorations;
    CalendarSpec spec;
    Extents extents;
    std::vector<std::pair<int, int>> months; // (year, month), chronological
    layout::GridDims dims;
};

// Every (year, month) from the table's first date through its last,
// including months without observations.
std::vector<std::pair<int, int>> span_months(const io::TidyTable& table);

// Restructures the table into calendar coordinates: scales x and y, places
// each date's cell, applies the optional polar transform, projects onto the
// canvas, and attaches reference lines and labels.
LayoutFrame frame_calendar(const io::TidyTable& table, const CalendarSpec& spec,
                           const decor::Locale& locale = decor::builtin_locale("en"));

} // namespace calgrid
