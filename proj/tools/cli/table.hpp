#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace optforce::cli {

/// A rectangular numeric result plus free-text metadata lines.
struct Table {
    std::vector<std::string> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// '#'-prefixed metadata, header row, comma separated, '\n' line ends.
void write_csv(std::ostream& out, const Table& table);

// {"metadata": [...], "columns": [...], "rows": [[...], ...]}; non-finite
// values become null.
void write_json(std::ostream& out, const Table& table);

}  // namespace optforce::cli
