#pragma once

#include <cstddef>
#include <string>

namespace rvec {

// Lines and columns are 1-based; the end position is inclusive (the column of
// the last character covered). Byte offsets are half-open [begin, end).
struct SourceSpan {
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool contains(const SourceSpan& inner) const {
    return begin <= inner.begin && inner.end <= end;
  }

  bool operator==(const SourceSpan&) const = default;
};

// Smallest span covering both.
inline SourceSpan merge(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan out = a.begin <= b.begin ? a : b;
  const SourceSpan& last = a.end >= b.end ? a : b;
  out.end_line = last.end_line;
  out.end_col = last.end_col;
  out.end = last.end;
  return out;
}

inline std::string to_string(const SourceSpan& s) {
  return std::to_string(s.start_line) + ":" + std::to_string(s.start_col);
}

}  // namespace rvec
