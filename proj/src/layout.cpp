#include "calgrid/layout.hpp"

#include "calgrid/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace calgrid::layout {

namespace {

// Residue in [1, modulus]: a zero residue means the slot sits at the end of
// a row (or the last week), not before the start.
int mod_star(int value, int modulus) {
    const int r = value % modulus;
    return r == 0 ? modulus : r;
}

} // namespace

int day_slot(const MonthFrame& frame, int day_of_month) {
    if (day_of_month < 1 || day_of_month > frame.days)
        throw std::invalid_argument("day_slot: day " + std::to_string(day_of_month) +
                                    " outside month of " + std::to_string(frame.days) +
                                    " days");
    return frame.first_weekday + day_of_month - 1;
}

std::pair<int, int> cell_position(int g) {
    const int i = (mod_star(g, 35) + 6) / 7; // ceil over the wrapped slot
    const int j = mod_star(g, 7);
    return {i, j};
}

std::pair<int, int> month_slot(int seq, const GridDims& dims, Direction dir) {
    if (seq < 1 || seq > dims.rows * dims.cols)
        throw CapacityError("month " + std::to_string(seq) + " does not fit a " +
                            std::to_string(dims.rows) + "x" + std::to_string(dims.cols) +
                            " grid");
    const int idx = seq - 1;
    if (dir == Direction::horizontal)
        return {idx / dims.cols + 1, idx % dims.cols + 1};
    return {idx % dims.rows + 1, idx / dims.rows + 1};
}

GridDims auto_grid(int n_months) {
    if (n_months < 1)
        throw std::invalid_argument("auto_grid: need at least one month");
    const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_months))));
    const int rows = (n_months + cols - 1) / cols;
    return GridDims{rows, cols, 0.3};
}

CellBox cell_box(const CellAddress& addr, const GridDims& dims, Direction dir) {
    const double b = dims.gap;
    if (dir == Direction::horizontal) {
        return CellBox{addr.weekday + (addr.month_col - 1) * 7 + (addr.month_col - 1) * b,
                       -(addr.week + (addr.month_row - 1) * 5 + (addr.month_row - 1) * b)};
    }
    return CellBox{addr.week + (addr.month_col - 1) * 5 + (addr.month_col - 1) * b,
                   -(addr.weekday + (addr.month_row - 1) * 7 + (addr.month_row - 1) * b)};
}

LayoutPoint project_point(const CellAddress& addr, const ScaledPoint& p,
                          const GridDims& dims, Direction dir, double width,
                          double height) {
    const CellBox box = cell_box(addr, dims, dir);
    return LayoutPoint{box.x0 + p.h * width, box.y0 + p.c * height};
}

Unprojected unproject_point(const LayoutPoint& pt, const GridDims& dims,
                            Direction dir, double width, double height) {
    const double b = dims.gap;
    // Strides between month blocks along each canvas axis.
    const double sx = (dir == Direction::horizontal ? 7.0 : 5.0) + b;
    const double sy = (dir == Direction::horizontal ? 5.0 : 7.0) + b;

    const int n = static_cast<int>(std::floor((pt.x - 1.0) / sx)) + 1;
    const double local_x = pt.x - (n - 1) * sx;
    const int col = static_cast<int>(std::floor(local_x));
    const double h = (local_x - col) / width;

    const double t = -pt.y; // distance below the canvas top
    const int m = static_cast<int>(std::ceil(t / sy));
    const double local_t = t - (m - 1) * sy;
    const int row = static_cast<int>(std::ceil(local_t));
    const double c = (row - local_t) / height;

    Unprojected r;
    r.cell.month_row = m;
    r.cell.month_col = n;
    if (dir == Direction::horizontal) {
        r.cell.week = row;
        r.cell.weekday = col;
    } else {
        r.cell.week = col;
        r.cell.weekday = row;
    }
    r.point = ScaledPoint{h, c};
    return r;
}

std::pair<double, double> polar_project(const ScaledPoint& p) {
    if (p.c == 0.0)
        return {0.5, 0.5};
    const double theta = std::numbers::pi / 2 - 2 * std::numbers::pi * p.h;
    const double r = p.c / 2;
    return {0.5 + r * std::cos(theta), 0.5 + r * std::sin(theta)};
}

std::pair<int, int> weekly_cell(const civil::Date& date,
                                const civil::Date& span_first,
                                civil::WeekStart start) {
    // Week index = number of week-start boundaries between the span's first
    // date and this one, counted via the start-of-week day numbers.
    const long sow_date = civil::day_number(date) - (civil::day_of_week(date, start) - 1);
    const long sow_first =
        civil::day_number(span_first) - (civil::day_of_week(span_first, start) - 1);
    const int row = static_cast<int>((sow_date - sow_first) / 7) + 1;
    return {row, civil::day_of_week(date, start)};
}

std::pair<int, int> daily_cell(const civil::Date& date, int span_first_year,
                               int span_first_month) {
    const int row =
        (date.year - span_first_year) * 12 + (date.month - span_first_month) + 1;
    return {row, date.day};
}

} // namespace calgrid::layout
