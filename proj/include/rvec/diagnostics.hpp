#pragma once

// One code space shared by the static checker and the interpreter, so that a
// runtime finding can be matched against a static one by code and span.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rvec/source_span.hpp"

namespace rvec {

enum class Code {
  E_NONNUMERIC,
  W_NONMULTIPLE,
  W_REPLACE_NONMULTIPLE,
  E_NULLREPL,
  E_NULLDATA,
  E_NOTFUN,
  E_UNUSED_ARGS,
  E_NONLOGICAL,
  E_MIXEDSIGNS,
  E_DIMS_MISMATCH,
  E_BADDIMS,
  E_MATRIX_DIMS,
  W_MATRIX_TRUNC,
  E_OOB_ASSIGN,
  W_OOB_READ,
  W_ZERO_INDEX,
  E_NA_SUBASSIGN,
  E_UNBOUND,
  E_MISSING_ARG,
  E_BADSUBSCRIPT,
  E_BADCOMBINE,
  E_RECURSION_LIMIT,
};

enum class Severity { Error, Warning };
enum class Phase { Static, Runtime };

struct CatalogEntry {
  Code code;
  std::string_view name;
  Severity severity;
  std::string_view message;  // fixed text, or the template used by make_message
  bool shows_call;           // R prints "Error in <call> :" for this condition
};

std::span<const CatalogEntry> catalog();
const CatalogEntry& catalog_entry(Code code);
std::string_view code_name(Code code);
std::optional<Code> code_from_name(std::string_view name);
Severity default_severity(Code code);
std::string_view severity_name(Severity s);
std::string_view phase_name(Phase p);

// A condition raised by a value-level operation before it is placed in the
// source; the interpreter and checker attach the span.
struct Condition {
  Code code;
  std::string message;
};

Condition make_condition(Code code);
Condition unused_arguments(const std::vector<std::string>& arg_texts);
Condition missing_argument(std::string_view param);
Condition unbound_variable(std::string_view name);
Condition bad_subscript_type(std::string_view type_name);

struct Diagnostic {
  Code code;
  Severity severity;
  SourceSpan span;
  std::string message;
  Phase phase;
  // Deparsed call that R would name in "Error in <call> :"; not serialized.
  std::string call;
};

Diagnostic make_diagnostic(const Condition& cond, SourceSpan span, Phase phase, std::string call = {});

// `severity[code] at line:col: message` followed by the source line and a caret
// underline.
std::string render_text(const Diagnostic& d, std::string_view source);

// Deterministic JSON array sorted by (start_line, start_col, code).
std::string render_json(std::span<const Diagnostic> diagnostics);

// The R console form: "Error in <call> : <msg>" (wrapped the way R wraps it).
std::string render_r_error(const Diagnostic& d);
// "Warning message:" / "Warning messages:" block for the warnings of one
// top-level statement.
std::string render_r_warnings(std::span<const Diagnostic> warnings);

}  // namespace rvec
