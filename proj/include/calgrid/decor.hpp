#pragma once

#include "calgrid/civil.hpp"
#include "calgrid/layout.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace calgrid::decor {

enum class Weight { major, minor };

// Axis-aligned reference line on the canvas.
struct Segment {
    double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
    Weight weight = Weight::minor;
};

enum class LabelKind { month, weekday };

struct LabelAnchor {
    double x = 0, y = 0;
    std::string text;
    LabelKind kind = LabelKind::month;
};

// Month and weekday names. Weekday names are stored Monday-first; the
// rotation for a Sunday week start happens when labels are positioned.
struct Locale {
    std::string id;
    std::array<std::string, 12> month_names;
    std::array<std::string, 7> weekday_names;
};

// Built-in locales: "en" and "zh-Hans". Throws LocaleError otherwise.
const Locale& builtin_locale(std::string_view id);

// Accepts a built-in id or a path to a UTF-8 file of 19 non-empty lines:
// 12 month names then 7 weekday names, Monday first.
Locale load_locale(const std::string& id_or_path);

// One rectangular block of cells (a month block, or the whole grid for the
// weekly/daily layouts).
struct Block {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    std::vector<layout::CellBox> cells;
};

// Anchor position for one laid-out month, plus the year for multi-year
// label disambiguation.
struct MonthAnchor {
    int year = 0;
    int month = 1;
    double x = 0, y = 0;
};

// Four major segments surrounding each block plus, per cell, one minor
// vertical at the cell's left edge and one minor horizontal at its bottom.
std::vector<Segment> reference_lines(std::span<const Block> blocks);

// Month labels at the given anchors and exactly seven weekday labels. The
// weekday anchors come in column order starting from the active week start;
// with_year appends the year to month labels (multi-year spans).
std::vector<LabelAnchor>
label_positions(std::span<const MonthAnchor> months,
                const std::array<std::pair<double, double>, 7>& weekday_anchors,
                const Locale& locale, civil::WeekStart start, bool with_year);

} // namespace calgrid::decor
