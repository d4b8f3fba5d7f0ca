#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace drgkit::tools {

struct Cell {
  std::string row;
  std::string column;
  std::string computed;
  std::string expected;
  bool ok = false;
};

struct TableResult {
  std::string name;
  std::vector<Cell> cells;
  std::vector<std::string> notes;

  bool ok() const;
};

struct ReproduceOptions {
  /// Adds the 128-vertex half-cube to the at4 table.
  bool slow = false;
  std::size_t threads = 0;
};

/// shrikhande, chang, gq, taylor, at4, j82.
std::vector<std::string> table_names();

/// Errors: "unknown table".
TableResult reproduce_table(std::string_view name, const ReproduceOptions& opts = {});

void print_table(std::ostream& os, const TableResult& t);

}  // namespace drgkit::tools
