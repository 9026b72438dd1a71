#include "calgrid/frame.hpp"

#include "calgrid/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace calgrid {

namespace {

using layout::CellAddress;
using layout::CellBox;
using layout::Direction;
using layout::GridDims;

void validate_spec(const CalendarSpec& spec) {
    if (!(spec.width > 0.0 && spec.width <= 1.0))
        throw std::invalid_argument("width must be in (0,1], got " +
                                    std::to_string(spec.width));
    if (!(spec.height > 0.0 && spec.height <= 1.0))
        throw std::invalid_argument("height must be in (0,1], got " +
                                    std::to_string(spec.height));
    if (spec.margin && !(*spec.margin >= 0.0))
        throw std::invalid_argument("margin must be nonnegative");
    if (spec.nrow && *spec.nrow < 1)
        throw std::invalid_argument("nrow must be positive");
    if (spec.ncol && *spec.ncol < 1)
        throw std::invalid_argument("ncol must be positive");
}

GridDims month_grid(const CalendarSpec& spec, int n_months) {
    GridDims dims;
    if (spec.nrow && spec.ncol)
        dims = GridDims{*spec.nrow, *spec.ncol, 0.3};
    else if (spec.nrow)
        dims = GridDims{*spec.nrow, (n_months + *spec.nrow - 1) / *spec.nrow, 0.3};
    else if (spec.ncol)
        dims = GridDims{(n_months + *spec.ncol - 1) / *spec.ncol, *spec.ncol, 0.3};
    else
        dims = layout::auto_grid(n_months);
    dims.gap = spec.gap();
    if (dims.rows * dims.cols < n_months)
        throw CapacityError(std::to_string(n_months) + " months do not fit a " +
                            std::to_string(dims.rows) + "x" +
                            std::to_string(dims.cols) + " grid");
    return dims;
}

// Builds a block from its full logical cell grid (weeks x weekdays, or
// rows x columns for the weekly/daily layouts); cell_box applies the
// direction.
decor::Block make_block(const GridDims& dims, Direction dir, int month_row,
                        int month_col, int weeks, int weekdays) {
    decor::Block block;
    block.cells.reserve(static_cast<std::size_t>(weeks * weekdays));
    block.min_x = block.min_y = std::numeric_limits<double>::infinity();
    block.max_x = block.max_y = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= weeks; ++i) {
        for (int j = 1; j <= weekdays; ++j) {
            const CellBox box =
                layout::cell_box({month_row, month_col, i, j}, dims, dir);
            block.cells.push_back(box);
            block.min_x = std::min(block.min_x, box.x0);
            block.max_x = std::max(block.max_x, box.x0 + 1.0);
            block.min_y = std::min(block.min_y, box.y0);
            block.max_y = std::max(block.max_y, box.y0 + 1.0);
        }
    }
    return block;
}

} // namespace

std::vector<std::pair<int, int>> span_months(const io::TidyTable& table) {
    if (table.rows() == 0)
        throw SchemaError("empty input table");
    const auto [lo, hi] = std::minmax_element(table.dates.begin(), table.dates.end());
    std::vector<std::pair<int, int>> months;
    int year = lo->year;
    int month = lo->month;
    while (year < hi->year || (year == hi->year && month <= hi->month)) {
        months.emplace_back(year, month);
        if (++month > 12) {
            month = 1;
            ++year;
        }
    }
    return months;
}

LayoutFrame frame_calendar(const io::TidyTable& table, const CalendarSpec& spec,
                           const decor::Locale& locale) {
    validate_spec(spec);
    if (table.rows() == 0)
        throw SchemaError("empty input table");
    if (table.dates.size() != table.rows())
        throw SchemaError("table roles are not bound; build it with make_table or read_csv");

    const civil::WeekStart start = spec.week_start();
    const Direction dir = spec.dir;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    LayoutFrame frame;
    frame.spec = spec;
    frame.months = span_months(table);
    const int n_months = static_cast<int>(frame.months.size());
    const int first_year = frame.months.front().first;
    const int first_month = frame.months.front().second;
    const civil::Date span_first = *std::min_element(table.dates.begin(), table.dates.end());
    const civil::Date span_last = *std::max_element(table.dates.begin(), table.dates.end());

    // Cell addressing per layout.
    std::vector<CellAddress> cells;
    cells.reserve(table.rows());
    int week_rows = 0; // weekly layout height
    switch (spec.calendar) {
    case CalendarType::monthly: {
        frame.dims = month_grid(spec, n_months);
        for (const civil::Date& d : table.dates) {
            const int seq = (d.year - first_year) * 12 + (d.month - first_month) + 1;
            const auto [m, n] = layout::month_slot(seq, frame.dims, dir);
            const layout::MonthFrame mf{
                civil::day_of_week(civil::Date{d.year, d.month, 1}, start),
                civil::days_in_month(d.year, d.month)};
            const auto [i, j] = layout::cell_position(layout::day_slot(mf, d.day));
            cells.push_back({m, n, i, j});
        }
        break;
    }
    case CalendarType::weekly: {
        frame.dims = GridDims{1, 1, spec.gap()};
        week_rows = layout::weekly_cell(span_last, span_first, start).first;
        for (const civil::Date& d : table.dates) {
            const auto [row, col] = layout::weekly_cell(d, span_first, start);
            cells.push_back({1, 1, row, col});
        }
        break;
    }
    case CalendarType::daily: {
        frame.dims = GridDims{1, 1, spec.gap()};
        for (const civil::Date& d : table.dates) {
            const auto [row, col] = layout::daily_cell(d, first_year, first_month);
            cells.push_back({1, 1, row, col});
        }
        break;
    }
    }

    // Scale, optionally bend into a star, then project.
    const scale::Scaled scaled =
        scale::apply_scale(table.dates, table.x, table.y, spec.scale_mode, start);
    frame.x_cal.reserve(table.rows());
    frame.y_cal.reserve(table.rows());
    for (std::size_t r = 0; r < table.rows(); ++r) {
        layout::ScaledPoint p{scaled.h[r], scaled.c[r]};
        if (std::isnan(p.c)) {
            if (spec.polar) {
                frame.x_cal.push_back(nan); // angle alone places nothing
                frame.y_cal.push_back(nan);
            } else {
                const CellBox box = layout::cell_box(cells[r], frame.dims, dir);
                frame.x_cal.push_back(box.x0 + p.h * spec.width);
                frame.y_cal.push_back(nan);
            }
            continue;
        }
        if (spec.polar) {
            const auto [u, v] = layout::polar_project(p);
            p = layout::ScaledPoint{u, v};
        }
        const layout::LayoutPoint pt =
            layout::project_point(cells[r], p, frame.dims, dir, spec.width, spec.height);
        frame.x_cal.push_back(pt.x);
        frame.y_cal.push_back(pt.y);
    }
    frame.cells = std::move(cells);

    // Block geometry for reference lines and extents.
    std::vector<decor::Block> blocks;
    std::vector<decor::MonthAnchor> anchors;
    if (spec.calendar == CalendarType::monthly) {
        blocks.reserve(frame.months.size());
        for (int seq = 1; seq <= n_months; ++seq) {
            const auto [m, n] = layout::month_slot(seq, frame.dims, dir);
            decor::Block block = make_block(frame.dims, dir, m, n, 5, 7);
            const auto [year, month] = frame.months[static_cast<std::size_t>(seq - 1)];
            anchors.push_back({year, month, block.min_x, block.max_y});
            blocks.push_back(std::move(block));
        }
    } else {
        const int rows = spec.calendar == CalendarType::weekly ? week_rows : n_months;
        const int cols = spec.calendar == CalendarType::weekly ? 7 : 31;
        blocks.push_back(make_block(frame.dims, dir, 1, 1, rows, cols));
        const decor::Block& block = blocks.front();
        for (int seq = 1; seq <= n_months; ++seq) {
            const auto [year, month] = frame.months[static_cast<std::size_t>(seq - 1)];
            int row;
            if (spec.calendar == CalendarType::daily) {
                row = seq;
            } else {
                const civil::Date month_first{year, month, 1};
                const civil::Date anchor_date = std::max(month_first, span_first);
                row = layout::weekly_cell(anchor_date, span_first, start).first;
            }
            const CellBox top = layout::cell_box({1, 1, row, 1}, frame.dims, dir);
            if (dir == Direction::horizontal)
                anchors.push_back({year, month, block.min_x, top.y0 + 1.0});
            else
                anchors.push_back({year, month, top.x0, block.max_y});
        }
    }

    frame.extents.min_x = frame.extents.min_y = std::numeric_limits<double>::infinity();
    frame.extents.max_x = frame.extents.max_y = -std::numeric_limits<double>::infinity();
    for (const decor::Block& block : blocks) {
        frame.extents.min_x = std::min(frame.extents.min_x, block.min_x);
        frame.extents.max_x = std::max(frame.extents.max_x, block.max_x);
        frame.extents.min_y = std::min(frame.extents.min_y, block.min_y);
        frame.extents.max_y = std::max(frame.extents.max_y, block.max_y);
    }

    // Weekday label anchors: centered on the first block's weekday columns
    // along the bottom edge, or on the weekday rows along the left edge when
    // the grid is transposed.
    std::array<std::pair<double, double>, 7> weekday_anchors;
    for (int col = 1; col <= 7; ++col) {
        if (dir == Direction::horizontal) {
            const CellBox box = layout::cell_box({1, 1, 1, col}, frame.dims, dir);
            weekday_anchors[static_cast<std::size_t>(col - 1)] = {box.x0 + 0.5,
                                                                  frame.extents.min_y};
        } else {
            const CellBox box = layout::cell_box({1, 1, 1, col}, frame.dims, dir);
            weekday_anchors[static_cast<std::size_t>(col - 1)] = {frame.extents.min_x,
                                                                  box.y0 + 0.5};
        }
    }

    const bool with_year = frame.months.front().first != frame.months.back().first;
    frame.decorations.segments = decor::reference_lines(blocks);
    frame.decorations.labels =
        decor::label_positions(anchors, weekday_anchors, locale, start, with_year);
    frame.table = table;
    return frame;
}

} // namespace calgrid
