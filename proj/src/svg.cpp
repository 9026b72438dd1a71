#include "calgrid/svg.hpp"

#include "calgrid/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace calgrid::svg {

namespace {

// Panel content paddings in pixels; the bottom leaves room for weekday
// labels, the top for month labels.
constexpr double pad_left = 14.0;
constexpr double pad_right = 10.0;
constexpr double pad_top = 16.0;
constexpr double pad_bottom = 26.0;
constexpr double title_strip = 18.0;
constexpr double minor_width = 0.6;
constexpr double major_width = 1.4;

// Fixed-point with up to 9 decimals, trailing zeros trimmed. Enough
// precision that parsing the document back reproduces coordinates to well
// under a thousandth of a pixel, and stable across runs.
std::string num(double v) {
    if (v == 0.0)
        v = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    std::string s(buf);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.')
        s.pop_back();
    return s;
}

std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(ch);
        }
    }
    return out;
}

// Distinct values of a column in first-appearance order; a single unnamed
// key when the column is absent.
std::vector<std::string> distinct_keys(const io::TidyTable& table,
                                       const std::optional<std::size_t>& col) {
    if (!col)
        return {""};
    std::vector<std::string> keys;
    std::map<std::string, bool> seen;
    for (const std::string& v : table.columns[*col]) {
        if (!seen.emplace(v, true).second)
            continue;
        keys.push_back(v);
    }
    return keys;
}

std::size_t key_index(const std::vector<std::string>& keys, const std::string& v) {
    return static_cast<std::size_t>(
        std::find(keys.begin(), keys.end(), v) - keys.begin());
}

struct Series {
    std::vector<std::size_t> rows; // sorted by raw x
};

bool row_present(const LayoutFrame& frame, std::size_t r) {
    return !std::isnan(frame.x_cal[r]) && !std::isnan(frame.y_cal[r]);
}

void emit_gridlines(std::ostream& out, const LayoutFrame& frame,
                    const RenderStyle& style, const Viewport& vp) {
    for (int pass = 0; pass < 2; ++pass) {
        const auto weight = pass == 0 ? decor::Weight::minor : decor::Weight::major;
        for (const decor::Segment& seg : frame.decorations.segments) {
            if (seg.weight != weight)
                continue;
            out << "<line x1=\"" << num(vp.px(seg.x1)) << "\" y1=\"" << num(vp.py(seg.y1))
                << "\" x2=\"" << num(vp.px(seg.x2)) << "\" y2=\"" << num(vp.py(seg.y2))
                << "\" stroke=\""
                << (weight == decor::Weight::minor ? style.minor_color : style.major_color)
                << "\" stroke-width=\""
                << num(weight == decor::Weight::minor ? minor_width : major_width)
                << "\"/>\n";
        }
    }
}

void emit_labels(std::ostream& out, const LayoutFrame& frame,
                 const RenderStyle& style, const Viewport& vp) {
    const bool vertical = frame.spec.dir == layout::Direction::vertical;
    for (const decor::LabelAnchor& label : frame.decorations.labels) {
        double x = vp.px(label.x);
        double y = vp.py(label.y);
        const char* anchor = "start";
        if (label.kind == decor::LabelKind::month) {
            y -= 4.0; // sit just above the block's top edge
        } else if (!vertical) {
            anchor = "middle";
            y += style.font_size + 3.0; // below the bottom edge
        } else {
            anchor = "end";
            x -= 5.0; // left of the grid
            y += style.font_size / 3.0;
        }
        out << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" text-anchor=\""
            << anchor << "\" font-family=\"sans-serif\" font-size=\""
            << num(style.font_size) << "\" fill=\"" << style.label_color
            << (label.kind == decor::LabelKind::weekday ? "\" class=\"wday-label" : "")
            << "\">" << escape_xml(label.text) << "</text>\n";
    }
}

void emit_lines(std::ostream& out, const LayoutFrame& frame, const RenderStyle& style,
                const Viewport& vp, const std::vector<std::size_t>& panel_rows,
                const std::vector<std::string>& groups) {
    // One series per (date, group), rows ordered by raw x within it.
    std::map<std::pair<long, std::size_t>, Series> series;
    for (std::size_t r : panel_rows) {
        const long day = civil::day_number(frame.table.dates[r]);
        const std::size_t group =
            frame.table.group_col
                ? key_index(groups, frame.table.columns[*frame.table.group_col][r])
                : 0;
        series[{day, group}].rows.push_back(r);
    }
    for (auto& [key, s] : series) {
        std::stable_sort(s.rows.begin(), s.rows.end(), [&](std::size_t a, std::size_t b) {
            return frame.table.x[a] < frame.table.x[b];
        });
        const std::string& color = style.palette[key.second % style.palette.size()];
        // Break the polyline at missing values.
        std::string points;
        const auto flush = [&] {
            if (points.empty())
                return;
            out << "<polyline points=\"" << points << "\" fill=\"none\" stroke=\""
                << color << "\" stroke-width=\"" << num(style.stroke_width)
                << "\" stroke-linejoin=\"round\" stroke-linecap=\"round\"/>\n";
            points.clear();
        };
        for (std::size_t r : s.rows) {
            if (!row_present(frame, r)) {
                flush();
                continue;
            }
            if (!points.empty())
                points.push_back(' ');
            points += num(vp.px(frame.x_cal[r]));
            points.push_back(',');
            points += num(vp.py(frame.y_cal[r]));
        }
        flush();
    }
}

void emit_points(std::ostream& out, const LayoutFrame& frame, const RenderStyle& style,
                 const Viewport& vp, const std::vector<std::size_t>& panel_rows,
                 const std::vector<std::string>& groups) {
    for (std::size_t r : panel_rows) {
        if (!row_present(frame, r))
            continue;
        const std::size_t group =
            frame.table.group_col
                ? key_index(groups, frame.table.columns[*frame.table.group_col][r])
                : 0;
        out << "<circle cx=\"" << num(vp.px(frame.x_cal[r])) << "\" cy=\""
            << num(vp.py(frame.y_cal[r])) << "\" r=\"" << num(style.point_radius)
            << "\" fill=\"" << style.palette[group % style.palette.size()] << "\"/>\n";
    }
}

} // namespace

std::pair<int, int> facet_grid(int n_panels) {
    const layout::GridDims dims = layout::auto_grid(n_panels);
    return {dims.rows, dims.cols};
}

PanelRect panel_rect(const RenderStyle& style, int index, int n_panels) {
    const auto [rows, cols] = facet_grid(n_panels);
    const double w = static_cast<double>(style.canvas_width) / cols;
    const double h = static_cast<double>(style.canvas_height) / rows;
    return PanelRect{(index % cols) * w, (index / cols) * h, w, h};
}

Viewport panel_viewport(const Extents& extents, const PanelRect& panel,
                        bool with_title) {
    const double top = pad_top + (with_title ? title_strip : 0.0);
    const double content_w = panel.w - pad_left - pad_right;
    const double content_h = panel.h - top - pad_bottom;
    Viewport vp;
    vp.sx = content_w / (extents.max_x - extents.min_x);
    vp.sy = content_h / (extents.max_y - extents.min_y);
    vp.tx = panel.x + pad_left - vp.sx * extents.min_x;
    vp.ty = panel.y + top + vp.sy * extents.max_y;
    return vp;
}

std::string render_svg_string(const LayoutFrame& frame, const RenderStyle& style) {
    const std::vector<std::string> facets =
        distinct_keys(frame.table, frame.table.facet_col);
    const std::vector<std::string> groups =
        distinct_keys(frame.table, frame.table.group_col);
    const bool faceted = frame.table.facet_col.has_value();

    if (frame.table.group_col && groups.size() > style.palette.size())
        std::cerr << "calgrid: " << groups.size() << " groups but only "
                  << style.palette.size() << " palette colors; colors will repeat\n";

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << style.canvas_width << "\" height=\"" << style.canvas_height
        << "\" viewBox=\"0 0 " << style.canvas_width << ' ' << style.canvas_height
        << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << style.canvas_width << "\" height=\""
        << style.canvas_height << "\" fill=\"" << style.background << "\"/>\n";

    for (std::size_t panel_idx = 0; panel_idx < facets.size(); ++panel_idx) {
        const PanelRect rect =
            panel_rect(style, static_cast<int>(panel_idx), static_cast<int>(facets.size()));
        const Viewport vp = panel_viewport(frame.extents, rect, faceted);

        std::vector<std::size_t> panel_rows;
        panel_rows.reserve(frame.table.rows());
        for (std::size_t r = 0; r < frame.table.rows(); ++r) {
            if (!faceted ||
                frame.table.columns[*frame.table.facet_col][r] == facets[panel_idx])
                panel_rows.push_back(r);
        }

        out << "<g class=\"panel\"";
        if (faceted)
            out << " data-facet=\"" << escape_xml(facets[panel_idx]) << "\"";
        out << ">\n";
        emit_gridlines(out, frame, style, vp);
        emit_labels(out, frame, style, vp);
        if (faceted) {
            out << "<text x=\"" << num(rect.x + rect.w / 2) << "\" y=\""
                << num(rect.y + 13.0)
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\""
                << num(style.font_size) << "\" font-weight=\"bold\" fill=\""
                << style.label_color << "\">" << escape_xml(facets[panel_idx])
                << "</text>\n";
        }
        out << "<g class=\"glyphs\">\n";
        if (style.glyph == Glyph::line)
            emit_lines(out, frame, style, vp, panel_rows, groups);
        else
            emit_points(out, frame, style, vp, panel_rows, groups);
        out << "</g>\n</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void render_svg(const LayoutFrame& frame, const RenderStyle& style,
                const std::string& path) {
    const std::string doc = render_svg_string(frame, style);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << doc;
    out.flush();
    if (!out)
        throw IoError("write to '" + path + "' failed");
}

} // namespace calgrid::svg
