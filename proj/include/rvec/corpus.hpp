#pragma once

// Golden corpus cases and the checker-vs-interpreter diff harness.
//
// A case file is R source, a line reading `# ---`, then expectations:
//   #> <line>               expected `run` output, one line each
//   #! <CODE> <phase> <line>  an expected diagnostic (phase: static|runtime)
//   ## <text>                a note
// Blank lines after the separator are ignored.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rvec/diagnostics.hpp"
#include "rvec/shapecheck.hpp"

namespace rvec {

struct ExpectedDiagnostic {
  Code code;
  Phase phase;
  int line;

  bool operator==(const ExpectedDiagnostic&) const = default;
  auto operator<=>(const ExpectedDiagnostic& o) const {
    if (auto c = static_cast<int>(phase) <=> static_cast<int>(o.phase); c != 0) return c;
    if (auto c = line <=> o.line; c != 0) return c;
    return static_cast<int>(code) <=> static_cast<int>(o.code);
  }
};

std::string to_string(const ExpectedDiagnostic& d);

struct CorpusCase {
  std::string name;
  std::string source;
  std::string expected_output;  // joined `#>` lines, each newline-terminated
  std::vector<ExpectedDiagnostic> expected_diagnostics;
  std::vector<std::string> notes;
};

// Throws std::runtime_error on a malformed case.
CorpusCase parse_corpus_case(const std::string& text, std::string name = {});
std::string read_file(const std::filesystem::path& path);  // throws std::runtime_error
// `.R` files under `path` (or `path` itself), sorted by name.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& path);

// Output of running a program the way `rvec-check run` prints it.
struct RunResult {
  std::string output;
  std::vector<Diagnostic> diagnostics;  // runtime diagnostics in order
  int exit_code = 0;
};

struct RunSettings {
  bool r_compat_growth = false;
};

// Parses and runs `source`, stopping at the first error. Syntax errors are
// reported in `output` with exit code 3.
RunResult run_source(const std::string& source, const RunSettings& settings = {});

// Observed (code, phase, line) triples for a case: all static diagnostics
// plus the runtime diagnostics of `run_source`.
std::vector<ExpectedDiagnostic> observed_diagnostics(const std::string& source);

enum class Verdict { Agree, CheckerWeaker, Mismatch };
std::string_view verdict_name(Verdict v);

struct DiffRow {
  std::size_t statement = 0;  // 1-based
  int line = 0;
  std::string predicted;                // static type rendering
  std::optional<std::size_t> predicted_size;
  std::optional<std::size_t> runtime_length;  // empty if the statement failed
  std::vector<Diagnostic> static_diagnostics;
  std::vector<Diagnostic> runtime_diagnostics;
  Verdict verdict = Verdict::Agree;
  std::string reason;
};

struct DiffReport {
  std::string name;
  std::vector<DiffRow> rows;
  std::string error;  // parse failure, if any

  std::size_t count(Verdict v) const;
};

// Whether a static finding accounts for a runtime one at the same span.
bool static_covers(Code static_code, Code runtime_code);

DiffReport diff_source(const std::string& source, std::string name = {}, const CheckOptions& options = {});

}  // namespace rvec
