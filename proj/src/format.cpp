#include "granulex/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace granulex {

std::string sig12_string(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value,
                                    std::chars_format::general, 12);
  return std::string(buf, result.ptr);
}

double round_sig12(double value) {
  if (!std::isfinite(value)) return value;
  const std::string text = sig12_string(value);
  double rounded = value;
  std::from_chars(text.data(), text.data() + text.size(), rounded);
  return rounded;
}

}  // namespace granulex
