#include "rvec/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rvec/interp.hpp"
#include "rvec/print_value.hpp"

namespace rvec {

namespace fs = std::filesystem;

std::string to_string(const ExpectedDiagnostic& d) {
  return std::string(code_name(d.code)) + " " + std::string(phase_name(d.phase)) + " " + std::to_string(d.line);
}

CorpusCase parse_corpus_case(const std::string& text, std::string name) {
  CorpusCase c;
  c.name = std::move(name);
  std::istringstream in(text);
  std::string line;
  bool in_expectations = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!in_expectations) {
      if (line == "# ---") {
        in_expectations = true;
      } else {
        c.source += line + "\n";
      }
      continue;
    }
    if (line.empty()) continue;
    if (line == "#>") {
      c.expected_output += "\n";
    } else if (line.rfind("#> ", 0) == 0) {
      c.expected_output += line.substr(3) + "\n";
    } else if (line.rfind("#! ", 0) == 0) {
      std::istringstream fields(line.substr(3));
      std::string code, phase;
      int at = 0;
      if (!(fields >> code >> phase >> at)) {
        throw std::runtime_error(c.name + ":" + std::to_string(line_no) + ": malformed diagnostic expectation");
      }
      auto parsed = code_from_name(code);
      if (!parsed) throw std::runtime_error(c.name + ":" + std::to_string(line_no) + ": unknown code " + code);
      if (phase != "static" && phase != "runtime") {
        throw std::runtime_error(c.name + ":" + std::to_string(line_no) + ": unknown phase " + phase);
      }
      c.expected_diagnostics.push_back({*parsed, phase == "static" ? Phase::Static : Phase::Runtime, at});
    } else if (line.rfind("##", 0) == 0) {
      c.notes.push_back(line.size() > 3 ? line.substr(3) : std::string());
    } else {
      throw std::runtime_error(c.name + ":" + std::to_string(line_no) + ": unexpected line after separator");
    }
  }
  if (!in_expectations) throw std::runtime_error(c.name + ": missing '# ---' separator");
  std::sort(c.expected_diagnostics.begin(), c.expected_diagnostics.end());
  return c;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read " + path.string());
  return ss.str();
}

std::vector<fs::path> corpus_files(const fs::path& path) {
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::recursive_directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".R") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  return files;
}

namespace {

std::string syntax_error_text(const SyntaxError& e) {
  std::string out = "Error: " + std::string(e.what()) + " at " + to_string(e.span());
  if (!e.expected().empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < e.expected().size(); ++i) {
      if (i > 0) out += ", ";
      out += e.expected()[i];
    }
    out += ")";
  }
  return out + "\n";
}

}  // namespace

RunResult run_source(const std::string& source, const RunSettings& settings) {
  RunResult r;
  Program program;
  try {
    program = parse_source(source);
  } catch (const SyntaxError& e) {
    r.output = syntax_error_text(e);
    r.exit_code = 3;
    return r;
  }
  EvalOptions options;
  options.r_compat_growth = settings.r_compat_growth;
  options.stop_on_error = true;
  Interpreter interp(options);
  bool warned = false;
  for (const auto& stmt : program.exprs) {
    EvalOutcome o = interp.eval_statement(*stmt, program.source);
    warned = warned || !o.warnings.empty();
    if (o.error) {
      r.output += render_r_error(*o.error);
      if (!o.warnings.empty()) r.output += "In addition: " + render_r_warnings(o.warnings);
      r.diagnostics = [&] {
        auto all = r.diagnostics;
        auto these = o.diagnostics();
        all.insert(all.end(), these.begin(), these.end());
        return all;
      }();
      r.exit_code = 2;
      return r;
    }
    if (o.visible && o.result) r.output += print_value(*o.result);
    r.output += render_r_warnings(o.warnings);
    r.diagnostics.insert(r.diagnostics.end(), o.warnings.begin(), o.warnings.end());
  }
  r.exit_code = warned ? 1 : 0;
  return r;
}

std::vector<ExpectedDiagnostic> observed_diagnostics(const std::string& source) {
  std::vector<ExpectedDiagnostic> out;
  Program program;
  try {
    program = parse_source(source);
  } catch (const SyntaxError&) {
    return out;
  }
  CheckReport report = check_program(program);
  for (const auto& d : report.diagnostics) out.push_back({d.code, Phase::Static, d.span.start_line});
  RunResult run = run_source(source);
  for (const auto& d : run.diagnostics) out.push_back({d.code, Phase::Runtime, d.span.start_line});
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Agree: return "agree";
    case Verdict::CheckerWeaker: return "checker-weaker";
    case Verdict::Mismatch: return "MISMATCH";
  }
  return "?";
}

std::size_t DiffReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [v](const DiffRow& r) { return r.verdict == v; }));
}

bool static_covers(Code static_code, Code runtime_code) {
  if (static_code == runtime_code) return true;
  // The checker rejects any non-two-dimensional matrix shape outright, where
  // the runtime either truncates (with a warning) or fails on too few dims.
  return static_code == Code::E_MATRIX_DIMS &&
         (runtime_code == Code::W_MATRIX_TRUNC || runtime_code == Code::E_BADDIMS);
}

DiffReport diff_source(const std::string& source, std::string name, const CheckOptions& options) {
  DiffReport report;
  report.name = std::move(name);
  Program program;
  try {
    program = parse_source(source);
  } catch (const SyntaxError& e) {
    report.error = syntax_error_text(e);
    return report;
  }
  CheckReport check = check_program(program, options);
  Interpreter interp;
  for (std::size_t i = 0; i < program.exprs.size(); ++i) {
    const StatementCheck& sc = check.statements[i];
    EvalOutcome o = interp.eval_statement(*program.exprs[i], program.source);

    DiffRow row;
    row.statement = i + 1;
    row.line = program.exprs[i]->span.start_line;
    row.predicted = to_string(sc.type);
    if (!sc.type.is_top() && !sc.type.is_bottom() && sc.type.size.is_known()) row.predicted_size = sc.type.size.value();
    if (o.result) row.runtime_length = length_of(*o.result);
    row.static_diagnostics = sc.diagnostics;
    row.runtime_diagnostics = o.diagnostics();

    if (row.predicted_size && row.runtime_length && *row.predicted_size != *row.runtime_length) {
      row.verdict = Verdict::Mismatch;
      row.reason = "predicted length " + std::to_string(*row.predicted_size) + ", runtime length " +
                   std::to_string(*row.runtime_length);
    }
    if (row.verdict != Verdict::Mismatch && sc.precise) {
      for (const auto& rd : row.runtime_diagnostics) {
        bool matched = std::any_of(sc.diagnostics.begin(), sc.diagnostics.end(), [&](const Diagnostic& sd) {
          return sd.span == rd.span && static_covers(sd.code, rd.code);
        });
        if (!matched) {
          row.verdict = Verdict::Mismatch;
          row.reason = "runtime " + std::string(code_name(rd.code)) + " at " + to_string(rd.span) +
                       " has no static counterpart";
          break;
        }
      }
    }
    const bool both_failed = sc.type.is_bottom() && !o.result;
    if (row.verdict != Verdict::Mismatch && (!sc.precise || (!row.predicted_size && !both_failed))) {
      row.verdict = Verdict::CheckerWeaker;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace rvec
