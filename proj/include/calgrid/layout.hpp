#pragma once

#include "calgrid/civil.hpp"

#include <utility>

namespace calgrid::layout {

// Horizontal fills weeks left-to-right with weekdays as columns; vertical
// transposes the cell grid and the month macro grid.
enum class Direction { horizontal, vertical };

// One month's shape: the weekday of its first day (under the active week
// start) and its length in days.
struct MonthFrame {
    int first_weekday = 1; // k, 1..7
    int days = 31;         // d, 28..31
};

// Location of one day's unit cell: month block (row, col) in the macro grid
// and (week, weekday) inside the block. Monthly layouts keep week in [1,5]
// after wrapping; weekly and daily layouts reuse the same address shape with
// week (or weekday) running as far as the span requires.
struct CellAddress {
    int month_row = 1; // m
    int month_col = 1; // n
    int week = 1;      // i
    int weekday = 1;   // j

    auto operator<=>(const CellAddress&) const = default;
};

// Macro-grid shape: rows x cols of month blocks separated by gap (in cell
// units).
struct GridDims {
    int rows = 1;     // M
    int cols = 1;     // N
    double gap = 0.3; // b
};

// Within-cell data position, both coordinates already scaled to [0,1].
struct ScaledPoint {
    double h = 0.0; // scaled within-day position
    double c = 0.0; // scaled value
};

struct LayoutPoint {
    double x = 0.0;
    double y = 0.0;
};

// Unit cell box [x0, x0+1] x [y0, y0+1]; glyphs occupy the bottom-left
// width x height fraction of it.
struct CellBox {
    double x0 = 0.0;
    double y0 = 0.0;
};

// Day slot inside the 35-cell month frame: g = k + day_of_month - 1.
int day_slot(const MonthFrame& frame, int day_of_month);

// Within-month grid position (week, weekday) for slot g. Zero residues map
// to the modulus itself, and slots past 35 wrap to week 1.
std::pair<int, int> cell_position(int g);

// Month block position for the seq-th month (1-based). Horizontal fills
// row-major, vertical column-major. Throws CapacityError when seq exceeds
// rows x cols.
std::pair<int, int> month_slot(int seq, const GridDims& dims, Direction dir);

// Near-square default grid: cols = ceil(sqrt(n)), rows = ceil(n / cols).
GridDims auto_grid(int n_months);

// Bottom-left corner of a cell's unit box on the canvas. Later weeks and
// later month rows sit lower (y decreases); see project_point.
CellBox cell_box(const CellAddress& addr, const GridDims& dims, Direction dir);

// Final canvas position of a scaled point inside its cell. For the
// horizontal direction:
//   x = j + (n-1)*7 + (n-1)*b + h*width
//   y = -(i + (m-1)*5 + (m-1)*b) + c*height
// The sign on y makes the grid read top-down like a wall calendar while the
// canvas stays y-up; within each cell the origin is the bottom-left corner.
// The vertical direction swaps the roles of i and j together with the 7/5
// multipliers.
LayoutPoint project_point(const CellAddress& addr, const ScaledPoint& p,
                          const GridDims& dims, Direction dir, double width,
                          double height);

// Inverse of project_point for points strictly inside a cell of a monthly
// grid (week in [1,5], weekday in [1,7]): recovers the integer address
// exactly and (h, c) to floating-point accuracy. Points on a shared cell
// boundary resolve to the earlier cell.
struct Unprojected {
    CellAddress cell;
    ScaledPoint point;
};
Unprojected unproject_point(const LayoutPoint& pt, const GridDims& dims,
                            Direction dir, double width, double height);

// Star-plot transform within the unit cell: time of day becomes the angle
// (midnight at 12 o'clock, clockwise), value becomes the radius c/2 from
// the cell center.
std::pair<double, double> polar_project(const ScaledPoint& p);

// Weekly layout: one row per week of the span, one column per weekday.
// Row 1 is the week containing span_first.
std::pair<int, int> weekly_cell(const civil::Date& date,
                                const civil::Date& span_first,
                                civil::WeekStart start);

// Daily layout: one row per month of the span, one column per day of month.
std::pair<int, int> daily_cell(const civil::Date& date, int span_first_year,
                               int span_first_month);

} // namespace calgrid::layout
