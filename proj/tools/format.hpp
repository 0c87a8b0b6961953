#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace trace_census::cli {

/// Shortest round-trip decimal form; locale independent.
inline std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return "nan";
  return {buf, end};
}

/// Fixed number of significant digits, for human-readable tables.
inline std::string format_general(double v, int precision = 6) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
  if (ec != std::errc{}) return "nan";
  return {buf, end};
}

}  // namespace trace_census::cli
