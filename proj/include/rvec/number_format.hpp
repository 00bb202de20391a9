#pragma once

// Formatting of doubles the way R's print() and as.character() do it: a
// common width/precision is chosen for a whole column of numbers, and fixed
// notation is used unless scientific notation is strictly narrower.

#include <optional>
#include <span>
#include <string>

namespace rvec {

struct RealFormat {
  int width = 0;
  int decimals = 0;      // digits after the point (mantissa digits if scientific)
  bool scientific = false;
};

// nullopt entries are NA. `digits` is the number of significant digits (7 for
// printing, 15 for character conversion).
RealFormat choose_real_format(std::span<const std::optional<double>> values, int digits = 7);

// Right-aligned to fmt.width; NA renders as "NA".
std::string format_real(std::optional<double> value, const RealFormat& fmt);

// One number on its own, without padding.
std::string format_number(double value, int digits = 7);

// Shortest R-style spelling that reads back as exactly `value`.
std::string format_number_exact(double value);

}  // namespace rvec
