#pragma once

// R console rendering of values: `[k]`-prefixed vectors wrapped at 80
// columns, the `[i,]`/`[,j]` matrix grid, `, , k` slices for higher-rank
// arrays, NULL and closures. Output ends with a newline.

#include <string>

#include "rvec/values.hpp"

namespace rvec {

std::string print_value(const RValue& value);

// R's quoted rendering of a string: "a\"b".
std::string quote_string(const std::string& s);

}  // namespace rvec
