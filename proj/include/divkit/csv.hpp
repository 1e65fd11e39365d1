#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace divkit {

struct CsvTable {
  /// Empty when the file has no header row.
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Reads a numeric CSV with exactly `columns` fields per row. A first row
/// that does not parse as numbers is taken as the header. Blank lines and
/// lines starting with '#' are skipped. Throws FormatError.
CsvTable read_numeric_csv(const std::string& path, std::size_t columns);

/// Shortest representation that round-trips to the same double.
std::string format_double(double value);

}  // namespace divkit
