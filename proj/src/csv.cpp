#include "kantorovich/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "kantorovich/error.hpp"

namespace kantorovich {

void CsvTable::add_row(std::vector<CsvCell> row) {
    if (row.size() != columns.size()) throw ShapeMismatch("CSV row width differs from header");
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string quote_if_needed(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string format_cell(const CsvCell& cell) {
    struct Visitor {
        std::string operator()(const std::string& s) const { return quote_if_needed(s); }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
    };
    return std::visit(Visitor{}, cell);
}

std::string render_csv(const CsvTable& table) {
    std::string out;
    for (const auto& c : table.comments) out += "# " + c + "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out.push_back(',');
        out += quote_if_needed(table.columns[i]);
    }
    out.push_back('\n');
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out.push_back(',');
            out += format_cell(row[i]);
        }
        out.push_back('\n');
    }
    return out;
}

void write_csv_report(const CsvTable& table, const std::string& path) {
    const std::string text = render_csv(table);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!file) throw IoError("write to '" + path + "' failed");
}

}  // namespace kantorovich
