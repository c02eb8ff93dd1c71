#ifndef LZWALK_SRC_TABLE_HPP
#define LZWALK_SRC_TABLE_HPP

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "lzwalk/cli.hpp"

namespace lzwalk::cli {

// Empty cell, integer, real, boolean or text.
using Cell = std::variant<std::monostate, long long, double, bool, std::string>;

/// Rows with a fixed column list, written as CSV or as {"config": ..., "rows": [...]}.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
  void write(const RunConfig& config, std::ostream& out) const;
};

}  // namespace lzwalk::cli

#endif  // LZWALK_SRC_TABLE_HPP
