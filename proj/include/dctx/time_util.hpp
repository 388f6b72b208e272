#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace dctx {

/// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(int year, int month, int day);

/// Seconds since the Unix epoch for a civil UTC datetime.
double civil_to_epoch(int year, int month, int day, int hour, int minute,
                      double second);

/// Decomposition of an instant into local civil fields under a fixed
/// UTC offset. Day-of-week is 0=Monday .. 6=Sunday.
struct LocalParts {
  int dow = 0;
  int sec_of_day = 0;
};

LocalParts local_parts(double utc_seconds, int utc_offset_minutes);

enum class TimestampKind { epoch_seconds, iso8601 };

/// Parse an ISO-8601 datetime: "YYYY-MM-DD[T ]HH:MM:SS[.frac][Z|+HH:MM|-HH:MM]".
/// A missing zone designator means UTC. Returns epoch seconds.
std::optional<double> parse_iso8601(std::string_view text);

/// Classify a timestamp field: plain numeric means epoch seconds.
std::optional<TimestampKind> detect_timestamp_kind(std::string_view text);

/// Parse according to a detected kind.
std::optional<double> parse_timestamp(std::string_view text, TimestampKind kind);

}  // namespace dctx
