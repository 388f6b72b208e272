#include "dctx/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "dctx/errors.hpp"

namespace dctx {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"' && cur.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::optional<double> parse_double_field(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

CsvReader::CsvReader(const std::filesystem::path& path) : in_(path) {
  if (!in_) throw DataError("cannot open file: " + path.string());
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (line.empty() || line[0] == '#') continue;
    header_ = split_csv_line(line);
    return;
  }
  throw SchemaError("empty file (no header row): " + path.string());
}

std::optional<std::size_t> CsvReader::column(std::string_view name) const {
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
  };
  const std::string want = lower(name);
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (lower(header_[i]) == want) return i;
  }
  return std::nullopt;
}

bool CsvReader::next(std::vector<std::string>& fields, std::size_t& line_no) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (line.empty() || line[0] == '#') continue;
    fields = split_csv_line(line);
    line_no = line_no_;
    return true;
  }
  return false;
}

}  // namespace dctx
