#pragma once

#include "calgrid/frame.hpp"
#include "calgrid/table.hpp"

#include <iosfwd>
#include <string>

namespace calgrid::io {

// RFC-4180 CSV with a header row; UTF-8 passes through untouched. Empty y
// fields become missing values. Throws SchemaError / ParseError / IoError.
TidyTable read_csv(const std::string& path, const RoleMap& roles);
TidyTable read_csv(std::istream& in, const RoleMap& roles);

// Original columns with x_cal and y_cal appended, rows in input order.
// Coordinates carry 12 significant digits; a missing coordinate is an empty
// field.
void write_coords_csv(const LayoutFrame& frame, std::ostream& out);
void write_coords_csv(const LayoutFrame& frame, const std::string& path);

} // namespace calgrid::io
