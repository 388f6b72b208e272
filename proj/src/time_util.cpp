#include "dctx/time_util.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace dctx {

std::int64_t days_from_civil(int y, int m, int d) {
  // Howard Hinnant's algorithm, valid over the full Gregorian range.
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy =
      static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

double civil_to_epoch(int year, int month, int day, int hour, int minute,
                      double second) {
  return static_cast<double>(days_from_civil(year, month, day)) * 86400.0 +
         hour * 3600.0 + minute * 60.0 + second;
}

LocalParts local_parts(double utc_seconds, int utc_offset_minutes) {
  const double local = utc_seconds + 60.0 * utc_offset_minutes;
  std::int64_t whole = static_cast<std::int64_t>(std::floor(local));
  std::int64_t days = whole / 86400;
  std::int64_t rem = whole % 86400;
  if (rem < 0) {
    rem += 86400;
    days -= 1;
  }
  LocalParts out;
  // 1970-01-01 was a Thursday; with 0=Monday that is day 3.
  out.dow = static_cast<int>(((days % 7) + 7 + 3) % 7);
  out.sec_of_day = static_cast<int>(rem);
  return out;
}

namespace {

bool parse_int(std::string_view s, std::size_t pos, std::size_t len, int& out) {
  if (pos + len > s.size()) return false;
  int v = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = v;
  return true;
}

}  // namespace

std::optional<double> parse_iso8601(std::string_view s) {
  int year, month, day, hour, minute, sec;
  if (s.size() < 19) return std::nullopt;
  if (!parse_int(s, 0, 4, year) || s[4] != '-' || !parse_int(s, 5, 2, month) ||
      s[7] != '-' || !parse_int(s, 8, 2, day))
    return std::nullopt;
  if (s[10] != 'T' && s[10] != 't' && s[10] != ' ') return std::nullopt;
  if (!parse_int(s, 11, 2, hour) || s[13] != ':' ||
      !parse_int(s, 14, 2, minute) || s[16] != ':' || !parse_int(s, 17, 2, sec))
    return std::nullopt;
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 ||
      minute > 59 || sec > 60)
    return std::nullopt;

  std::size_t pos = 19;
  double frac = 0.0;
  if (pos < s.size() && s[pos] == '.') {
    std::size_t end = pos + 1;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end])))
      ++end;
    if (end == pos + 1) return std::nullopt;
    double scale = 0.1;
    for (std::size_t i = pos + 1; i < end; ++i) {
      frac += (s[i] - '0') * scale;
      scale *= 0.1;
    }
    pos = end;
  }

  int offset_min = 0;
  if (pos < s.size()) {
    const char c = s[pos];
    if (c == 'Z' || c == 'z') {
      ++pos;
    } else if (c == '+' || c == '-') {
      int oh = 0, om = 0;
      if (!parse_int(s, pos + 1, 2, oh)) return std::nullopt;
      std::size_t mpos = pos + 3;
      if (mpos < s.size() && s[mpos] == ':') ++mpos;
      if (!parse_int(s, mpos, 2, om)) return std::nullopt;
      offset_min = oh * 60 + om;
      if (c == '-') offset_min = -offset_min;
      pos = mpos + 2;
    }
  }
  if (pos != s.size()) return std::nullopt;

  return civil_to_epoch(year, month, day, hour, minute, sec + frac) -
         60.0 * offset_min;
}

std::optional<TimestampKind> detect_timestamp_kind(std::string_view text) {
  if (text.empty()) return std::nullopt;
  double v;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec == std::errc{} && ptr == end) return TimestampKind::epoch_seconds;
  if (parse_iso8601(text)) return TimestampKind::iso8601;
  return std::nullopt;
}

std::optional<double> parse_timestamp(std::string_view text,
                                      TimestampKind kind) {
  if (kind == TimestampKind::epoch_seconds) {
    double v;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      return std::nullopt;
    return v;
  }
  return parse_iso8601(text);
}

}  // namespace dctx
