#include "calgrid/csv.hpp"
#include "calgrid/errors.hpp"
#include "calgrid/frame.hpp"
#include "calgrid/svg.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <set>
#include <string>

namespace {

struct CliConfig {
    std::string input;
    std::string output;
    calgrid::io::RoleMap roles;
    std::string group_name;
    std::string facet_name;

    std::string calendar = "monthly";
    std::string dir = "h";
    bool sunday = false;
    int nrow = 0; // 0 = unset
    int ncol = 0;
    bool polar = false;
    std::string scale = "fixed";
    double width = 0.95;
    double height = 0.95;
    double margin = -1.0; // <0 = unset

    std::string glyph = "line";
    int canvas_width = 1200;
    int canvas_height = 800;
    std::string locale = "en";
};

void add_common_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--input", cfg.input, "input CSV file")->required();
    cmd->add_option("--output", cfg.output, "output file ('-' writes coords CSV to stdout)")
        ->required();
    cmd->add_option("--date", cfg.roles.date, "date column (ISO-8601 YYYY-MM-DD)")
        ->required();
    cmd->add_option("--x", cfg.roles.x, "within-day x column")->required();
    cmd->add_option("--y", cfg.roles.y, "value column (empty fields = missing)")
        ->required();
    cmd->add_option("--group", cfg.group_name, "series column for colored overlays");
    cmd->add_option("--facet", cfg.facet_name, "column splitting the output into panels");

    cmd->add_option("--calendar", cfg.calendar, "layout variant")
        ->check(CLI::IsMember({"monthly", "weekly", "daily"}))
        ->capture_default_str();
    cmd->add_option("--dir", cfg.dir, "grid direction")
        ->check(CLI::IsMember({"h", "v"}))
        ->capture_default_str();
    cmd->add_flag("--sunday", cfg.sunday, "weeks start on Sunday");
    cmd->add_option("--nrow", cfg.nrow, "rows of month blocks")->check(CLI::PositiveNumber);
    cmd->add_option("--ncol", cfg.ncol, "columns of month blocks")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--polar", cfg.polar, "star-plot cells (time as angle, value as radius)");
    cmd->add_option("--scale", cfg.scale, "value scaling scope")
        ->check(CLI::IsMember({"fixed", "free", "free_wday", "free_mday"}))
        ->capture_default_str();
    cmd->add_option("--width", cfg.width, "cell fraction used horizontally")
        ->check(CLI::Range(1e-9, 1.0))
        ->capture_default_str();
    cmd->add_option("--height", cfg.height, "cell fraction used vertically")
        ->check(CLI::Range(1e-9, 1.0))
        ->capture_default_str();
    cmd->add_option("--margin", cfg.margin, "gap between month blocks in cell units")
        ->check(CLI::NonNegativeNumber);
}

calgrid::CalendarSpec make_spec(const CliConfig& cfg) {
    calgrid::CalendarSpec spec;
    spec.calendar = cfg.calendar == "monthly" ? calgrid::CalendarType::monthly
                    : cfg.calendar == "weekly" ? calgrid::CalendarType::weekly
                                               : calgrid::CalendarType::daily;
    spec.dir = cfg.dir == "h" ? calgrid::layout::Direction::horizontal
                              : calgrid::layout::Direction::vertical;
    spec.sunday = cfg.sunday;
    if (cfg.nrow > 0)
        spec.nrow = cfg.nrow;
    if (cfg.ncol > 0)
        spec.ncol = cfg.ncol;
    spec.polar = cfg.polar;
    spec.scale_mode = cfg.scale == "fixed"       ? calgrid::scale::Mode::fixed
                      : cfg.scale == "free"      ? calgrid::scale::Mode::free
                      : cfg.scale == "free_wday" ? calgrid::scale::Mode::free_wday
                                                 : calgrid::scale::Mode::free_mday;
    spec.width = cfg.width;
    spec.height = cfg.height;
    if (cfg.margin >= 0.0)
        spec.margin = cfg.margin;
    return spec;
}

void print_summary(const calgrid::LayoutFrame& frame, const std::string& output) {
    std::set<std::tuple<int, int, int, int>> distinct;
    for (const auto& cell : frame.cells)
        distinct.insert({cell.month_row, cell.month_col, cell.week, cell.weekday});
    std::cerr << "rows=" << frame.table.rows() << " months=" << frame.months.size()
              << " cells=" << distinct.size() << " output=" << output << "\n";
}

int run(const CliConfig& cfg, bool render) {
    calgrid::io::RoleMap roles = cfg.roles;
    if (!cfg.group_name.empty())
        roles.group = cfg.group_name;
    if (!cfg.facet_name.empty())
        roles.facet = cfg.facet_name;

    const calgrid::io::TidyTable table = calgrid::io::read_csv(cfg.input, roles);
    const calgrid::decor::Locale locale = calgrid::decor::load_locale(cfg.locale);
    const calgrid::LayoutFrame frame =
        calgrid::frame_calendar(table, make_spec(cfg), locale);

    if (render) {
        calgrid::svg::RenderStyle style;
        style.glyph = cfg.glyph == "line" ? calgrid::svg::Glyph::line
                                          : calgrid::svg::Glyph::point;
        style.canvas_width = cfg.canvas_width;
        style.canvas_height = cfg.canvas_height;
        calgrid::svg::render_svg(frame, style, cfg.output);
    } else if (cfg.output == "-") {
        calgrid::io::write_coords_csv(frame, std::cout);
    } else {
        calgrid::io::write_coords_csv(frame, cfg.output);
    }
    print_summary(frame, cfg.output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"calgrid: lay sub-daily time series out on calendar grids"};
    app.require_subcommand(1);

    CliConfig coords_cfg;
    CLI::App* coords = app.add_subcommand("coords", "emit the input CSV with calendar "
                                                    "coordinates appended");
    add_common_options(coords, coords_cfg);

    CliConfig render_cfg;
    CLI::App* render = app.add_subcommand("render", "render the calendar to SVG");
    add_common_options(render, render_cfg);
    render->add_option("--glyph", render_cfg.glyph, "glyph drawn inside each cell")
        ->check(CLI::IsMember({"line", "point"}))
        ->capture_default_str();
    render->add_option("--canvas-width", render_cfg.canvas_width, "SVG width in px")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    render->add_option("--canvas-height", render_cfg.canvas_height, "SVG height in px")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    render->add_option("--locale", render_cfg.locale,
                       "label language: built-in id (en, zh-Hans) or locale file path")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run(render->parsed() ? render_cfg : coords_cfg, render->parsed());
    } catch (const calgrid::Error& e) {
        std::cerr << "calgrid: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "calgrid: " << e.what() << "\n";
        return 1;
    }
}
