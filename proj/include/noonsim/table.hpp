#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace noonsim {

using Cell = std::variant<long, double, std::string>;

/// Comma-separated result table: header line, rows, then `# key,value`
/// footer lines. Reals use 17 significant digits; infinities print as
/// "inf" / "-inf".
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> footer;

  void write_csv(std::ostream& out) const;
  std::string to_csv() const;
};

std::string format_real(double value);

}  // namespace noonsim
