#include "kp5/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kp5/errors.hpp"

namespace kp5 {

CsvWriter::CsvWriter(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw parameter_error("CsvWriter: need at least one column");
}

void CsvWriter::add_row(const std::vector<double>& values) {
  if (values.size() != columns_.size()) {
    throw parameter_error("CsvWriter: row width does not match header");
  }
  rows_.push_back(values);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string CsvWriter::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out << ',';
    out << columns_[i];
  }
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
  return out.str();
}

void CsvWriter::write(const std::string& path) const {
  write_file_atomic(path, to_string());
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw numerical_error("write_file_atomic: cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw numerical_error("write_file_atomic: short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace kp5
