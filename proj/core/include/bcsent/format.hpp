#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace bcsent {

/// Locale-independent decimal text. Without a precision the shortest
/// representation that round-trips is produced; with one, scientific notation.
inline std::string format_number(double x, std::optional<int> precision = std::nullopt) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = precision ? std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, *precision)
                             : std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

/// Parses the whole of `text` as a double (no locale, no leading '+').
inline std::optional<double> parse_number(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end) return std::nullopt;
  return value;
}

}  // namespace bcsent
