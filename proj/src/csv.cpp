#include "divkit/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "divkit/errors.hpp"

namespace divkit {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

bool parse_double(const std::string& text, double& out) {
  if (text.empty()) return false;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

CsvTable read_numeric_csv(const std::string& path, std::size_t columns) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");

  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    auto fields = split(stripped);
    if (fields.size() != columns) {
      throw FormatError(path + ":" + std::to_string(line_no) + ": expected " + std::to_string(columns) +
                        " fields, found " + std::to_string(fields.size()));
    }
    std::vector<double> row(columns);
    bool numeric = true;
    for (std::size_t i = 0; i < columns; ++i) numeric = numeric && parse_double(fields[i], row[i]);
    if (!numeric) {
      if (first) {
        table.header = std::move(fields);
        first = false;
        continue;
      }
      throw FormatError(path + ":" + std::to_string(line_no) + ": non-numeric field");
    }
    first = false;
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace divkit
