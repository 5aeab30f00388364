#pragma once

#include <string>
#include <variant>
#include <vector>

namespace kantorovich {

/// A CSV cell: floats are printed with 17 significant digits, +inf as "inf".
using CsvCell = std::variant<std::string, long long, double, bool>;

struct CsvTable {
    /// Written first as "# " lines (run configuration echo).
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<CsvCell>> rows;

    void add_row(std::vector<CsvCell> row);
};

std::string format_double(double v);
std::string format_cell(const CsvCell& cell);
std::string render_csv(const CsvTable& table);
void write_csv_report(const CsvTable& table, const std::string& path);

}  // namespace kantorovich
