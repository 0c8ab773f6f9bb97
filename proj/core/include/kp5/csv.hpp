#pragma once

#include <string>
#include <vector>

namespace kp5 {

// Column-ordered table of doubles written with %.17g, so a rerun of the same
// computation produces a byte-identical file.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);

  void add_row(const std::vector<double>& values);
  std::size_t row_count() const { return rows_.size(); }

  std::string to_string() const;
  // Writes via a temporary file and rename, so readers never see a torn file.
  void write(const std::string& path) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

std::string format_double(double v);  // %.17g

// Atomic small-file write used for CSVs and manifests.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace kp5
