#pragma once

#include "calgrid/frame.hpp"

#include <string>
#include <vector>

namespace calgrid::svg {

enum class Glyph { line, point };

// Presentation options. The palette is cycled (with a warning on stderr)
// when there are more groups than colors.
struct RenderStyle {
    Glyph glyph = Glyph::line;
    std::vector<std::string> palette = {"#0072b2", "#d55e00", "#009e73",
                                        "#e69f00", "#56b4e9", "#cc79a7",
                                        "#f0e442", "#999999"};
    double stroke_width = 1.0;
    double point_radius = 1.6;
    int canvas_width = 1200;
    int canvas_height = 800;
    std::string background = "#ffffff";
    std::string minor_color = "#dcdcdc";
    std::string major_color = "#8c8c8c";
    std::string label_color = "#333333";
    double font_size = 11.0;
};

// Pixel-space mapping of layout coordinates: px = tx + sx*x, py = ty - sy*y
// (the canvas is y-up, SVG is y-down).
struct Viewport {
    double sx = 1, sy = 1, tx = 0, ty = 0;

    double px(double x) const { return tx + sx * x; }
    double py(double y) const { return ty - sy * y; }
};

struct PanelRect {
    double x = 0, y = 0, w = 0, h = 0;
};

// Near-square facet arrangement: (rows, cols).
std::pair<int, int> facet_grid(int n_panels);

// Pixel rectangle of the index-th panel (row-major) on the canvas.
PanelRect panel_rect(const RenderStyle& style, int index, int n_panels);

// Viewport that maps the frame extents into the panel's content area.
// with_title reserves a strip at the top for the facet title.
Viewport panel_viewport(const Extents& extents, const PanelRect& panel,
                        bool with_title);

std::string render_svg_string(const LayoutFrame& frame, const RenderStyle& style);
void render_svg(const LayoutFrame& frame, const RenderStyle& style,
                const std::string& path);

} // namespace calgrid::svg
