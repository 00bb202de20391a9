#include "rvec/number_format.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace rvec {

namespace {

struct Decomposition {
  bool negative = false;
  int exponent = 0;  // power of ten of the leading digit after rounding
  int significant = 1;
};

Decomposition decompose(double x, int digits) {
  Decomposition d;
  if (x == 0.0) return d;
  d.negative = x < 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, std::fabs(x));
  // buf looks like "d.ddddde+XX" (or "de+XX" when digits == 1)
  const char* e = std::strchr(buf, 'e');
  d.exponent = std::atoi(e + 1);
  int last = 0;
  int count = 0;
  for (const char* p = buf; p != e; ++p) {
    if (*p == '.') continue;
    ++count;
    if (*p != '0') last = count;
  }
  d.significant = std::max(last, 1);
  return d;
}

}  // namespace

RealFormat choose_real_format(std::span<const std::optional<double>> values, int digits) {
  bool na = false, nan = false, pos_inf = false, neg_inf = false;
  bool any_finite = false, neg = false;
  int max_left = INT_MIN, right = 0, max_exp = INT_MIN, min_exp = INT_MAX, max_sig = INT_MIN;

  for (const auto& v : values) {
    if (!v) {
      na = true;
      continue;
    }
    double x = *v;
    if (std::isnan(x)) {
      nan = true;
    } else if (std::isinf(x)) {
      (x > 0 ? pos_inf : neg_inf) = true;
    } else {
      any_finite = true;
      Decomposition d = decompose(x, digits);
      int left = d.exponent + 1;
      int sleft = (d.negative ? 1 : 0) + (left <= 0 ? 1 : left);
      right = std::max(right, d.significant - d.exponent - 1);
      max_left = std::max(max_left, sleft);
      max_exp = std::max(max_exp, d.exponent);
      min_exp = std::min(min_exp, d.exponent);
      max_sig = std::max(max_sig, d.significant);
      neg = neg || d.negative;
    }
  }

  RealFormat fmt;
  if (any_finite) {
    int exp_digits = (max_exp >= 100 || min_exp <= -99) ? 2 : 1;
    int mantissa = max_sig - 1;
    int sci_width = (neg ? 1 : 0) + (mantissa > 0 ? 1 : 0) + mantissa + 4 + exp_digits;
    int fixed_width = max_left + right + (right != 0 ? 1 : 0);
    if (fixed_width <= sci_width) {
      fmt.width = fixed_width;
      fmt.decimals = right;
    } else {
      fmt.width = sci_width;
      fmt.decimals = mantissa;
      fmt.scientific = true;
    }
  }
  if (na) fmt.width = std::max(fmt.width, 2);
  if (nan || pos_inf) fmt.width = std::max(fmt.width, 3);
  if (neg_inf) fmt.width = std::max(fmt.width, 4);
  return fmt;
}

std::string format_real(std::optional<double> value, const RealFormat& fmt) {
  std::string body;
  if (!value) {
    body = "NA";
  } else if (std::isnan(*value)) {
    body = "NaN";
  } else if (std::isinf(*value)) {
    body = *value > 0 ? "Inf" : "-Inf";
  } else {
    double x = *value == 0.0 ? 0.0 : *value;  // no "-0"
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt.scientific ? "%.*e" : "%.*f", fmt.decimals, x);
    body = buf;
  }
  if (static_cast<int>(body.size()) < fmt.width) {
    body.insert(0, static_cast<std::size_t>(fmt.width) - body.size(), ' ');
  }
  return body;
}

std::string format_number(double value, int digits) {
  std::optional<double> v = value;
  RealFormat fmt = choose_real_format(std::span(&v, 1), digits);
  fmt.width = 0;
  return format_real(v, fmt);
}

std::string format_number_exact(double value) {
  if (value == 0.0 && std::signbit(value)) return "-0";
  std::string s = format_number(value, 15);
  if (!std::isfinite(value) || std::strtod(s.c_str(), nullptr) == value) return s;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace rvec
