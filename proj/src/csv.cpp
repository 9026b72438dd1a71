#include "calgrid/csv.hpp"

#include "calgrid/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace calgrid::io {

namespace {

// One record per call; quoted fields may contain commas, quotes ("") and
// line breaks. Returns false at end of input.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    if (in.peek() == EOF)
        return false;
    std::string field;
    bool quoted = false;
    for (;;) {
        const int ci = in.get();
        if (ci == EOF) {
            fields.push_back(std::move(field));
            return true;
        }
        const char ch = static_cast<char>(ci);
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(ch);
            }
            continue;
        }
        switch (ch) {
        case '"':
            quoted = true;
            break;
        case ',':
            fields.push_back(std::move(field));
            field.clear();
            break;
        case '\r':
            if (in.peek() == '\n')
                in.get();
            [[fallthrough]];
        case '\n':
            fields.push_back(std::move(field));
            return true;
        default:
            field.push_back(ch);
        }
    }
}

bool needs_quoting(const std::string& field) {
    return field.find_first_of(",\"\r\n") != std::string::npos;
}

void write_field(std::ostream& out, const std::string& field) {
    if (!needs_quoting(field)) {
        out << field;
        return;
    }
    out << '"';
    for (char ch : field) {
        if (ch == '"')
            out << '"';
        out << ch;
    }
    out << '"';
}

std::string format_coord(double v) {
    if (std::isnan(v))
        return {};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

TidyTable read_csv(std::istream& in, const RoleMap& roles) {
    std::vector<std::string> header;
    if (!read_record(in, header) || (header.size() == 1 && header[0].empty()))
        throw SchemaError("missing header row");

    std::vector<std::vector<std::string>> columns(header.size());
    std::vector<std::string> record;
    std::size_t row = 0;
    while (read_record(in, record)) {
        ++row;
        if (record.size() == 1 && record[0].empty())
            continue; // blank line
        if (record.size() != header.size())
            throw ParseError("row " + std::to_string(row) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(record.size()));
        for (std::size_t c = 0; c < record.size(); ++c)
            columns[c].push_back(std::move(record[c]));
    }
    return make_table(std::move(header), std::move(columns), roles);
}

TidyTable read_csv(const std::string& path, const RoleMap& roles) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    return read_csv(in, roles);
}

void write_coords_csv(const LayoutFrame& frame, std::ostream& out) {
    const io::TidyTable& t = frame.table;
    for (std::size_t c = 0; c < t.names.size(); ++c) {
        if (c)
            out << ',';
        write_field(out, t.names[c]);
    }
    out << ",x_cal,y_cal\n";
    for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            if (c)
                out << ',';
            write_field(out, t.columns[c][r]);
        }
        out << ',' << format_coord(frame.x_cal[r]) << ','
            << format_coord(frame.y_cal[r]) << '\n';
    }
}

void write_coords_csv(const LayoutFrame& frame, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    write_coords_csv(frame, out);
    out.flush();
    if (!out)
        throw IoError("write to '" + path + "' failed");
}

} // namespace calgrid::io
