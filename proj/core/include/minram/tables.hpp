#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace minram {

/// Column layouts of the shipped TSV tables.
inline const std::vector<std::string> kD8Header{"p", "A", "A^2-4B", "a", "b"};
inline const std::vector<std::string> kS3Header{"p", "u", "w", "pi"};

struct TableRow {
  int table = 0;  ///< 1 = D8 layout, 2 = S3 layout
  std::uint64_t p = 0;
  std::vector<std::string> cols;  ///< raw cells, p included
  std::size_t line = 0;
};

struct Table {
  int id = 0;
  std::vector<TableRow> rows;
};

/// The header line picks the layout. Malformed rows are collected and
/// reported together in one ParseError naming each line.
Table read_table(std::istream& in);
Table read_table_file(const std::string& path);

struct RowReport {
  std::size_t line = 0;
  std::uint64_t p = 0;
  std::vector<std::string> failed;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;

  bool pass() const { return failed.empty(); }
  nlohmann::json to_json() const;
};

struct TableReport {
  int table = 0;
  std::vector<RowReport> rows;

  std::size_t passed() const;
  bool ok() const { return passed() == rows.size(); }
  nlohmann::json to_json() const;
};

/// Pure replay: every condition is recomputed from the row's own cells.
RowReport verify_row(const TableRow& row);
TableReport verify_table(const Table& t);

}  // namespace minram
