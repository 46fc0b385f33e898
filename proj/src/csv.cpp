#include "oscillock/csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace oscillock {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::string& comment,
                     std::vector<std::string> columns)
    : out_(path, std::ios::binary), columns_(columns.size()), path_(path) {
  if (!out_) throw std::runtime_error("cannot write '" + path + "'");
  out_ << "# " << comment << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != columns_) throw std::logic_error("CSV row width does not match the header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    if (const double* d = std::get_if<double>(&cells[i])) {
      out_ << format_real(*d);
    } else if (const long long* n = std::get_if<long long>(&cells[i])) {
      out_ << *n;
    } else {
      out_ << std::get<std::string>(cells[i]);
    }
  }
  out_ << '\n';
}

void CsvWriter::close() {
  out_.close();
  if (!out_) throw std::runtime_error("failed writing '" + path_ + "'");
}

}  // namespace oscillock
