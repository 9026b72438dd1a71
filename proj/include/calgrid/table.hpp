#pragma once

#include "calgrid/civil.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace calgrid::io {

// Column names per role. date, x and y are required; group colors overlaid
// series and facet splits panels.
struct RoleMap {
    std::string date;
    std::string x;
    std::string y;
    std::optional<std::string> group;
    std::optional<std::string> facet;
};

// Column-oriented table. The raw text cells are kept verbatim so they can be
// written back untouched; the role columns are parsed once into typed
// vectors (NaN marks a missing y).
struct TidyTable {
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> columns; // column-major, same order as names

    std::size_t date_col = 0;
    std::size_t x_col = 0;
    std::size_t y_col = 0;
    std::optional<std::size_t> group_col;
    std::optional<std::size_t> facet_col;

    std::vector<civil::Date> dates;
    std::vector<double> x;
    std::vector<double> y;

    std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }

    const std::vector<std::string>& group_values() const {
        return columns[*group_col];
    }
    const std::vector<std::string>& facet_values() const {
        return columns[*facet_col];
    }
};

// Builds a bound table from raw columns: resolves the role map against the
// header (SchemaError when a mapped column is absent) and parses the role
// columns (ParseError with the 1-based data row on bad dates or numbers;
// empty y cells become missing).
TidyTable make_table(std::vector<std::string> names,
                     std::vector<std::vector<std::string>> columns,
                     const RoleMap& roles);

} // namespace calgrid::io
