#include "calgrid/decor.hpp"

#include "calgrid/errors.hpp"

#include <fstream>

namespace calgrid::decor {

namespace {

const Locale english{
    "en",
    {"Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov",
     "Dec"},
    {"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"},
};

const Locale simplified_chinese{
    "zh-Hans",
    {"一月", "二月", "三月", "四月", "五月", "六月", "七月", "八月", "九月",
     "十月", "十一月", "十二月"},
    {"星期一", "星期二", "星期三", "星期四", "星期五", "星期六", "星期日"},
};

} // namespace

const Locale& builtin_locale(std::string_view id) {
    if (id == "en")
        return english;
    if (id == "zh-Hans")
        return simplified_chinese;
    throw LocaleError("unknown locale '" + std::string(id) + "'");
}

Locale load_locale(const std::string& id_or_path) {
    if (id_or_path == "en" || id_or_path == "zh-Hans")
        return builtin_locale(id_or_path);

    std::ifstream in(id_or_path, std::ios::binary);
    if (!in)
        throw LocaleError("unknown locale '" + id_or_path +
                          "' (not a built-in id and not a readable file)");

    Locale loc;
    loc.id = id_or_path;
    std::string line;
    int line_no = 0;
    int filled = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            throw ParseError("locale file '" + id_or_path + "': line " +
                             std::to_string(line_no) + " is empty");
        if (filled >= 19)
            throw ParseError("locale file '" + id_or_path + "': line " +
                             std::to_string(line_no) +
                             " is extra (expected exactly 19 lines)");
        if (filled < 12)
            loc.month_names[static_cast<std::size_t>(filled)] = line;
        else
            loc.weekday_names[static_cast<std::size_t>(filled - 12)] = line;
        ++filled;
    }
    if (filled != 19)
        throw ParseError("locale file '" + id_or_path + "': expected 19 lines (12 month"
                         " names then 7 weekday names), got " + std::to_string(filled));
    return loc;
}

std::vector<Segment> reference_lines(std::span<const Block> blocks) {
    std::vector<Segment> out;
    for (const Block& block : blocks) {
        // Minor lines first so heavier strokes draw over them.
        for (const layout::CellBox& cell : block.cells) {
            out.push_back({cell.x0, cell.y0, cell.x0, cell.y0 + 1.0, Weight::minor});
            out.push_back({cell.x0, cell.y0, cell.x0 + 1.0, cell.y0, Weight::minor});
        }
        out.push_back({block.min_x, block.min_y, block.min_x, block.max_y, Weight::major});
        out.push_back({block.max_x, block.min_y, block.max_x, block.max_y, Weight::major});
        out.push_back({block.min_x, block.min_y, block.max_x, block.min_y, Weight::major});
        out.push_back({block.min_x, block.max_y, block.max_x, block.max_y, Weight::major});
    }
    return out;
}

std::vector<LabelAnchor>
label_positions(std::span<const MonthAnchor> months,
                const std::array<std::pair<double, double>, 7>& weekday_anchors,
                const Locale& locale, civil::WeekStart start, bool with_year) {
    std::vector<LabelAnchor> out;
    out.reserve(months.size() + 7);
    for (const MonthAnchor& anchor : months) {
        std::string text = locale.month_names[static_cast<std::size_t>(anchor.month - 1)];
        if (with_year)
            text += " " + std::to_string(anchor.year);
        out.push_back({anchor.x, anchor.y, std::move(text), LabelKind::month});
    }
    for (int col = 1; col <= 7; ++col) {
        // Column -> Monday-first name index under the active week start.
        const int name_idx = start == civil::WeekStart::monday
                                 ? col - 1
                                 : (col == 1 ? 6 : col - 2);
        const auto& [x, y] = weekday_anchors[static_cast<std::size_t>(col - 1)];
        out.push_back({x, y, locale.weekday_names[static_cast<std::size_t>(name_idx)],
                       LabelKind::weekday});
    }
    return out;
}

} // namespace calgrid::decor
