#include "rvec/print_value.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "rvec/number_format.hpp"

namespace rvec {

namespace {

constexpr std::size_t kLineWidth = 80;
constexpr std::size_t kGap = 1;

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::size_t index_width(std::size_t n) { return std::to_string(n).size(); }

std::string pad_left(const std::string& s, std::size_t width) {
  std::size_t w = display_width(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

// Formats a run of elements with a common width, as R does per vector or per
// matrix column. Returns the cells and whether they are left-aligned.
struct Cells {
  std::vector<std::string> text;
  std::size_t width = 0;
  bool left_aligned = false;
};

Cells format_cells(Mode mode, const std::vector<Scalar>& xs, std::size_t begin, std::size_t end) {
  Cells cells;
  switch (mode) {
    case Mode::Numeric: {
      std::vector<std::optional<double>> vals;
      for (std::size_t i = begin; i < end; ++i) {
        if (is_na(xs[i])) {
          vals.push_back(std::nullopt);
        } else {
          vals.push_back(std::get<double>(xs[i]));
        }
      }
      RealFormat fmt = choose_real_format(vals, 7);
      for (const auto& v : vals) cells.text.push_back(format_real(v, fmt));
      break;
    }
    case Mode::Logical:
      for (std::size_t i = begin; i < end; ++i) {
        cells.text.push_back(is_na(xs[i]) ? "NA" : (std::get<bool>(xs[i]) ? "TRUE" : "FALSE"));
      }
      break;
    case Mode::Character:
      cells.left_aligned = true;
      for (std::size_t i = begin; i < end; ++i) {
        cells.text.push_back(is_na(xs[i]) ? "NA" : quote_string(std::get<std::string>(xs[i])));
      }
      break;
    case Mode::Function: break;
  }
  for (const auto& t : cells.text) cells.width = std::max(cells.width, display_width(t));
  return cells;
}

std::string empty_vector_text(Mode mode) { return std::string(mode_name(mode)) + "(0)\n"; }

std::string print_vector(Mode mode, const std::vector<Scalar>& xs) {
  if (xs.empty()) return empty_vector_text(mode);
  Cells cells = format_cells(mode, xs, 0, xs.size());
  std::size_t label_width = index_width(xs.size()) + 2;
  auto label = [&](std::size_t i) { return pad_left("[" + std::to_string(i) + "]", label_width); };

  std::string out = label(1);
  std::size_t width = label_width;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0 && width + cells.width + kGap > kLineWidth) {
      out += "\n" + label(i + 1);
      width = label_width;
    }
    const std::string& t = cells.text[i];
    out += std::string(kGap, ' ') + (cells.left_aligned ? pad_right(t, cells.width) : pad_left(t, cells.width));
    width += cells.width + kGap;
  }
  return out + "\n";
}

// One column-major matrix stored at xs[offset, offset + nrow * ncol).
std::string print_matrix(Mode mode, const std::vector<Scalar>& xs, std::size_t offset, std::size_t nrow,
                         std::size_t ncol) {
  std::size_t row_label_width = nrow == 0 ? 0 : index_width(nrow) + 3;
  std::vector<Cells> columns;
  std::vector<std::size_t> widths;
  for (std::size_t j = 0; j < ncol; ++j) {
    std::size_t begin = offset + j * nrow;
    columns.push_back(format_cells(mode, xs, begin, begin + nrow));
    widths.push_back(std::max(columns.back().width, index_width(j + 1) + 3));
  }
  bool left = mode == Mode::Character;

  std::string out;
  if (ncol == 0) {
    out += std::string(row_label_width, ' ') + "\n";
    for (std::size_t i = 0; i < nrow; ++i) out += pad_left("[" + std::to_string(i + 1) + ",]", row_label_width) + "\n";
    return out;
  }
  std::size_t jmin = 0;
  while (jmin < ncol) {
    // Take as many columns as fit in the line width, at least one.
    std::size_t width = row_label_width;
    std::size_t jmax = jmin;
    do {
      width += widths[jmax] + kGap;
      ++jmax;
    } while (jmax < ncol && width + widths[jmax] + kGap < kLineWidth);

    out += std::string(row_label_width, ' ');
    for (std::size_t j = jmin; j < jmax; ++j) {
      std::string head = "[," + std::to_string(j + 1) + "]";
      out += std::string(kGap, ' ') + (left ? pad_right(head, widths[j]) : pad_left(head, widths[j]));
    }
    out += "\n";
    for (std::size_t i = 0; i < nrow; ++i) {
      out += pad_left("[" + std::to_string(i + 1) + ",]", row_label_width);
      for (std::size_t j = jmin; j < jmax; ++j) {
        const std::string& t = columns[j].text[i];
        out += std::string(kGap, ' ') + (left ? pad_right(t, widths[j]) : pad_left(t, widths[j]));
      }
      out += "\n";
    }
    jmin = jmax;
  }
  return out;
}

std::string print_array(const Array& a) {
  if (a.dims.size() == 1) return print_vector(a.mode, a.elems);
  if (a.dims.size() == 2) {
    if (a.dims[0] == 0 && a.dims[1] == 0) return "<0 x 0 matrix>\n";
    return print_matrix(a.mode, a.elems, 0, a.dims[0], a.dims[1]);
  }
  if (a.elems.empty()) {
    std::string out = "<";
    for (std::size_t i = 0; i < a.dims.size(); ++i) {
      if (i > 0) out += " x ";
      out += std::to_string(a.dims[i]);
    }
    return out + " array of " + std::string(a.mode == Mode::Numeric ? "double" : mode_name(a.mode)) + ">\n";
  }
  std::size_t nrow = a.dims[0];
  std::size_t ncol = a.dims[1];
  std::size_t slice = nrow * ncol;
  std::size_t slices = a.elems.size() / slice;
  std::string out;
  std::vector<std::size_t> index(a.dims.size() - 2, 0);
  for (std::size_t s = 0; s < slices; ++s) {
    out += ", , ";
    for (std::size_t k = 0; k < index.size(); ++k) {
      if (k > 0) out += ", ";
      out += std::to_string(index[k] + 1);
    }
    out += "\n\n";
    out += print_matrix(a.mode, a.elems, s * slice, nrow, ncol);
    out += "\n";
    for (std::size_t k = 0; k < index.size(); ++k) {
      if (++index[k] < a.dims[k + 2]) break;
      index[k] = 0;
    }
  }
  return out;
}

}  // namespace

std::string quote_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string print_value(const RValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Null>) {
          return "NULL\n";
        } else if constexpr (std::is_same_v<T, Vector>) {
          return print_vector(v.mode, v.elems);
        } else if constexpr (std::is_same_v<T, Array>) {
          return print_array(v);
        } else {
          if (v.builtin) return "function (...)  .Primitive(\"" + std::string(builtin_name(*v.builtin)) + "\")\n";
          return v.source + "\n";
        }
      },
      value);
}

}  // namespace rvec
