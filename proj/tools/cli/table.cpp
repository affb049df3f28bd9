#include "cli/table.hpp"

#include "cli/run_spec.hpp"

#include "json.hpp"

#include <cmath>
#include <ostream>

namespace optforce::cli {

void write_csv(std::ostream& out, const Table& table) {
    for (const auto& line : table.metadata) {
        out << "# " << line << '\n';
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_number(row[i]);
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const Table& table) {
    // Numbers are written by hand so they carry 17 significant digits.
    auto quote = [](const std::string& s) { return nlohmann::json(s).dump(); };
    out << "{\n  \"metadata\": [";
    for (std::size_t i = 0; i < table.metadata.size(); ++i) {
        out << (i ? ", " : "") << quote(table.metadata[i]);
    }
    out << "],\n  \"columns\": [";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? ", " : "") << quote(table.columns[i]);
    }
    out << "],\n  \"rows\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << (r ? ",\n    [" : "\n    [");
        const auto& row = table.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? ", " : "") << (std::isfinite(row[i]) ? format_number(row[i]) : "null");
        }
        out << ']';
    }
    out << (table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

}  // namespace optforce::cli
