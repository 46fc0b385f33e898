#pragma once

#include <fstream>
#include <string>
#include <variant>
#include <vector>

namespace oscillock {

// CSV output: UTF-8, comma separated, '.' decimal point, reals in scientific
// notation with 17 significant digits. The first line is a '#' comment
// carrying the tool version and config hash, the second names the columns.
class CsvWriter {
 public:
  using Cell = std::variant<double, long long, std::string>;

  CsvWriter(const std::string& path, const std::string& comment, std::vector<std::string> columns);

  void row(const std::vector<Cell>& cells);
  void close();

 private:
  std::ofstream out_;
  std::size_t columns_;
  std::string path_;
};

std::string format_real(double value);

}  // namespace oscillock
