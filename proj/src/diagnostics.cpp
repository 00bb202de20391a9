#include "rvec/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "json.hpp"

namespace rvec {

namespace {

// R's console wraps "<call> : <msg>" onto two lines past this width.
constexpr std::size_t kLongWarn = 75;

constexpr std::array<CatalogEntry, 22> kCatalog = {{
    {Code::E_NONNUMERIC, "E_NONNUMERIC", Severity::Error, "non-numeric argument to binary operator", true},
    {Code::W_NONMULTIPLE, "W_NONMULTIPLE", Severity::Warning,
     "longer object length is not a multiple of shorter object length", true},
    {Code::W_REPLACE_NONMULTIPLE, "W_REPLACE_NONMULTIPLE", Severity::Warning,
     "number of items to replace is not a multiple of replacement length", true},
    {Code::E_NULLREPL, "E_NULLREPL", Severity::Error, "replacement has length zero", true},
    {Code::E_NULLDATA, "E_NULLDATA", Severity::Error, "'data' must be of a vector type, was 'NULL'", true},
    {Code::E_NOTFUN, "E_NOTFUN", Severity::Error, "attempt to apply non-function", false},
    {Code::E_UNUSED_ARGS, "E_UNUSED_ARGS", Severity::Error, "unused argument", true},
    {Code::E_NONLOGICAL, "E_NONLOGICAL", Severity::Error,
     "operations are possible only for numeric, logical or complex types", true},
    {Code::E_MIXEDSIGNS, "E_MIXEDSIGNS", Severity::Error, "can't mix positive and negative subscripts", true},
    {Code::E_DIMS_MISMATCH, "E_DIMS_MISMATCH", Severity::Error, "non-conformable arrays", true},
    {Code::E_BADDIMS, "E_BADDIMS", Severity::Error,
     "the dims must be a non-empty vector of non-negative, non-NA numbers", true},
    {Code::E_MATRIX_DIMS, "E_MATRIX_DIMS", Severity::Error, "a matrix shape must have exactly two dimensions",
     true},
    {Code::W_MATRIX_TRUNC, "W_MATRIX_TRUNC", Severity::Warning,
     "matrix shape has more than two dimensions; only the first two are used", true},
    {Code::E_OOB_ASSIGN, "E_OOB_ASSIGN", Severity::Error,
     "subscript out of bounds: vectors have a fixed size and cannot grow by assignment", true},
    {Code::W_OOB_READ, "W_OOB_READ", Severity::Warning, "subscript is statically out of bounds and yields NA",
     true},
    {Code::W_ZERO_INDEX, "W_ZERO_INDEX", Severity::Warning, "zero subscripts are silently dropped", true},
    {Code::E_NA_SUBASSIGN, "E_NA_SUBASSIGN", Severity::Error, "NAs are not allowed in subscripted assignments",
     true},
    {Code::E_UNBOUND, "E_UNBOUND", Severity::Error, "object not found", false},
    {Code::E_MISSING_ARG, "E_MISSING_ARG", Severity::Error, "argument is missing, with no default", true},
    {Code::E_BADSUBSCRIPT, "E_BADSUBSCRIPT", Severity::Error, "invalid subscript type", true},
    {Code::E_BADCOMBINE, "E_BADCOMBINE", Severity::Error, "a function cannot be combined into a vector", true},
    {Code::E_RECURSION_LIMIT, "E_RECURSION_LIMIT", Severity::Error,
     "evaluation nested too deeply: infinite recursion / options(expressions=)?", false},
}};

std::size_t first_line_width(std::string_view msg) {
  auto nl = msg.find('\n');
  return nl == std::string_view::npos ? msg.size() : nl;
}

}  // namespace

std::span<const CatalogEntry> catalog() { return kCatalog; }

const CatalogEntry& catalog_entry(Code code) {
  for (const auto& e : kCatalog) {
    if (e.code == code) return e;
  }
  return kCatalog.front();
}

std::string_view code_name(Code code) { return catalog_entry(code).name; }

std::optional<Code> code_from_name(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (e.name == name) return e.code;
  }
  return std::nullopt;
}

Severity default_severity(Code code) { return catalog_entry(code).severity; }

std::string_view severity_name(Severity s) { return s == Severity::Error ? "error" : "warning"; }

std::string_view phase_name(Phase p) { return p == Phase::Static ? "static" : "runtime"; }

Condition make_condition(Code code) { return Condition{code, std::string(catalog_entry(code).message)}; }

Condition unused_arguments(const std::vector<std::string>& arg_texts) {
  std::string msg = arg_texts.size() == 1 ? "unused argument (" : "unused arguments (";
  for (std::size_t i = 0; i < arg_texts.size(); ++i) {
    if (i > 0) msg += ", ";
    msg += arg_texts[i];
  }
  return Condition{Code::E_UNUSED_ARGS, msg + ")"};
}

Condition missing_argument(std::string_view param) {
  return Condition{Code::E_MISSING_ARG, "argument \"" + std::string(param) + "\" is missing, with no default"};
}

Condition unbound_variable(std::string_view name) {
  return Condition{Code::E_UNBOUND, "object '" + std::string(name) + "' not found"};
}

Condition bad_subscript_type(std::string_view type_name) {
  return Condition{Code::E_BADSUBSCRIPT, "invalid subscript type '" + std::string(type_name) + "'"};
}

Diagnostic make_diagnostic(const Condition& cond, SourceSpan span, Phase phase, std::string call) {
  return Diagnostic{cond.code, default_severity(cond.code), span, cond.message, phase, std::move(call)};
}

std::string render_text(const Diagnostic& d, std::string_view source) {
  std::ostringstream out;
  out << severity_name(d.severity) << "[" << code_name(d.code) << "] at " << d.span.start_line << ":"
      << d.span.start_col << ": " << d.message << "\n";

  // Source excerpt: the first line of the span with carets under it.
  std::size_t line_start = std::min(d.span.begin, source.size());
  while (line_start > 0 && source[line_start - 1] != '\n') --line_start;
  std::size_t line_end = source.find('\n', line_start);
  if (line_end == std::string_view::npos) line_end = source.size();
  std::string_view line = source.substr(line_start, line_end - line_start);
  if (line.empty() && d.span.begin >= source.size()) return out.str();

  std::string gutter = std::to_string(d.span.start_line);
  out << "  " << gutter << " | " << line << "\n";
  int first = d.span.start_col;
  int last = d.span.end_line == d.span.start_line ? d.span.end_col : first;
  if (d.span.end_line != d.span.start_line) {
    // underline to the end of the first line
    int cols = 0;
    for (char c : line) {
      if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++cols;
    }
    last = std::max(first, cols);
  }
  out << "  " << std::string(gutter.size(), ' ') << " | " << std::string(static_cast<std::size_t>(first - 1), ' ')
      << std::string(static_cast<std::size_t>(std::max(1, last - first + 1)), '^') << "\n";
  return out.str();
}

std::string render_json(std::span<const Diagnostic> diagnostics) {
  std::vector<const Diagnostic*> sorted;
  sorted.reserve(diagnostics.size());
  for (const auto& d : diagnostics) sorted.push_back(&d);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Diagnostic* a, const Diagnostic* b) {
    if (a->span.start_line != b->span.start_line) return a->span.start_line < b->span.start_line;
    if (a->span.start_col != b->span.start_col) return a->span.start_col < b->span.start_col;
    return code_name(a->code) < code_name(b->code);
  });

  nlohmann::json arr = nlohmann::json::array();
  for (const Diagnostic* d : sorted) {
    arr.push_back({
        {"code", code_name(d->code)},
        {"severity", severity_name(d->severity)},
        {"phase", phase_name(d->phase)},
        {"message", d->message},
        {"span",
         {{"start_line", d->span.start_line},
          {"start_col", d->span.start_col},
          {"end_line", d->span.end_line},
          {"end_col", d->span.end_col}}},
    });
  }
  return arr.dump(2);
}

std::string render_r_error(const Diagnostic& d) {
  if (d.call.empty()) return "Error: " + d.message + "\n";
  std::string out = "Error in " + d.call + " : ";
  if (14 + d.call.size() + first_line_width(d.message) > kLongWarn) out += "\n  ";
  return out + d.message + "\n";
}

std::string render_r_warnings(std::span<const Diagnostic> warnings) {
  if (warnings.empty()) return {};
  if (warnings.size() > 10) {
    if (warnings.size() >= 50) return "There were 50 or more warnings (use warnings() to see the first 50)\n";
    return "There were " + std::to_string(warnings.size()) + " warnings (use warnings() to see them)\n";
  }
  std::string out = warnings.size() == 1 ? "Warning message:\n" : "Warning messages:\n";
  for (std::size_t i = 0; i < warnings.size(); ++i) {
    const Diagnostic& w = warnings[i];
    std::size_t prefix = 6;
    if (warnings.size() > 1) {
      out += std::to_string(i + 1) + ": ";
      prefix = 10;
    }
    if (w.call.empty()) {
      out += w.message + "\n";
      continue;
    }
    out += "In " + w.call + " :";
    if (prefix + w.call.size() + first_line_width(w.message) > kLongWarn) out += "\n ";
    out += " " + w.message + "\n";
  }
  return out;
}

}  // namespace rvec
