#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace dctx {

/// Shortest decimal string that round-trips the double exactly.
std::string format_double(double v);

std::string csv_quote(const std::string& field);

/// Line-oriented CSV reader. Skips blank lines and '#' comment lines (our
/// own writers emit a config echo as comments). Supports double-quoted
/// fields with "" escapes; no embedded newlines.
class CsvReader {
 public:
  explicit CsvReader(const std::filesystem::path& path);

  const std::vector<std::string>& header() const { return header_; }

  /// Case-insensitive header lookup.
  std::optional<std::size_t> column(std::string_view name) const;

  /// Next data row. Returns false at end of file. line_no is 1-based.
  bool next(std::vector<std::string>& fields, std::size_t& line_no);

 private:
  std::ifstream in_;
  std::vector<std::string> header_;
  std::size_t line_no_ = 0;
};

std::vector<std::string> split_csv_line(const std::string& line);

std::optional<double> parse_double_field(const std::string& s);

}  // namespace dctx
