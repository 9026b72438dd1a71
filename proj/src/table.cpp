#include "calgrid/table.hpp"

#include "calgrid/errors.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace calgrid::io {

namespace {

std::size_t find_column(const std::vector<std::string>& names, const std::string& wanted,
                        const char* role) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == wanted)
            return i;
    throw SchemaError(std::string(role) + " column '" + wanted + "' not found");
}

double parse_number(const std::string& text, std::size_t row, const char* role) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE || std::isnan(v))
        throw ParseError("row " + std::to_string(row) + ": invalid " + role +
                         " value '" + text + "'");
    return v;
}

} // namespace

TidyTable make_table(std::vector<std::string> names,
                     std::vector<std::vector<std::string>> columns,
                     const RoleMap& roles) {
    if (names.size() != columns.size())
        throw SchemaError("header names " + std::to_string(names.size()) +
                          " but " + std::to_string(columns.size()) + " columns");
    for (const auto& col : columns)
        if (col.size() != columns.front().size())
            throw SchemaError("columns have unequal lengths");

    TidyTable t;
    t.names = std::move(names);
    t.columns = std::move(columns);

    t.date_col = find_column(t.names, roles.date, "date");
    t.x_col = find_column(t.names, roles.x, "x");
    t.y_col = find_column(t.names, roles.y, "y");
    if (roles.group)
        t.group_col = find_column(t.names, *roles.group, "group");
    if (roles.facet)
        t.facet_col = find_column(t.names, *roles.facet, "facet");

    const std::size_t n = t.rows();
    t.dates.reserve(n);
    t.x.reserve(n);
    t.y.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::string& date_text = t.columns[t.date_col][r];
        try {
            t.dates.push_back(civil::parse_iso_date(date_text));
        } catch (const ParseError& e) {
            throw ParseError("row " + std::to_string(r + 1) + ": " + e.what());
        }
        t.x.push_back(parse_number(t.columns[t.x_col][r], r + 1, "x"));
        const std::string& y_text = t.columns[t.y_col][r];
        if (y_text.empty())
            t.y.push_back(std::numeric_limits<double>::quiet_NaN());
        else
            t.y.push_back(parse_number(y_text, r + 1, "y"));
    }
    return t;
}

} // namespace calgrid::io
