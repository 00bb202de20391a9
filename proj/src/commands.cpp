#include "rvec/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>

#include "json.hpp"
#include "rvec/corpus.hpp"
#include "rvec/interp.hpp"
#include "rvec/print_value.hpp"

namespace rvec {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int exit_for(std::span<const Diagnostic> diagnostics) {
  bool warn = false;
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::Error) return kExitErrors;
    warn = true;
  }
  return warn ? kExitWarnings : kExitClean;
}

void report_syntax_error(const SyntaxError& e, const std::string& name, std::ostream& err) {
  err << name << ":" << e.span().start_line << ":" << e.span().start_col << ": "
      << (e.is_lex_error() ? "lex error: " : "parse error: ") << e.what();
  if (!e.expected().empty()) {
    err << " (expected ";
    for (std::size_t i = 0; i < e.expected().size(); ++i) err << (i > 0 ? ", " : "") << e.expected()[i];
    err << ")";
  }
  err << "\n";
}

std::optional<std::string> load(const std::string& path, std::ostream& err) {
  try {
    return read_file(path);
  } catch (const std::exception& e) {
    err << "rvec-check: " << e.what() << "\n";
    return std::nullopt;
  }
}

// Corpus case files carry expectations after `# ---`; only the source runs.
std::string source_of(const std::string& text) {
  if (text.find("\n# ---") == std::string::npos && text.rfind("# ---", 0) != 0) return text;
  return parse_corpus_case(text).source;
}

}  // namespace

int check_text(const std::string& source, const std::string& name, const CheckCommandOptions& options,
               std::ostream& out, std::ostream& err) {
  Program program;
  try {
    program = parse_source(source);
  } catch (const SyntaxError& e) {
    report_syntax_error(e, name, err);
    return kExitSyntax;
  }
  CheckOptions check_options;
  check_options.strict_recycle = options.strict_recycle;
  CheckReport report = check_program(program, check_options);

  if (options.json) {
    json diagnostics = json::parse(render_json(report.diagnostics));
    if (options.types) {
      json types = json::array();
      for (std::size_t i = 0; i < report.statements.size(); ++i) {
        const auto& sc = report.statements[i];
        types.push_back({{"statement", i + 1},
                         {"line", sc.span.start_line},
                         {"type", to_string(sc.type)},
                         {"precise", sc.precise}});
      }
      out << json{{"diagnostics", diagnostics}, {"types", types}}.dump(2) << "\n";
    } else {
      out << diagnostics.dump(2) << "\n";
    }
    return exit_for(report.diagnostics);
  }

  std::vector<Diagnostic> sorted = report.diagnostics;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::pair(a.span.start_line, a.span.start_col) < std::pair(b.span.start_line, b.span.start_col);
  });
  for (const auto& d : sorted) out << render_text(d, source);
  if (options.types) {
    for (std::size_t i = 0; i < report.statements.size(); ++i) {
      const auto& sc = report.statements[i];
      out << "statement " << i + 1 << " (line " << sc.span.start_line << "): " << to_string(sc.type) << "\n";
    }
  }
  return exit_for(report.diagnostics);
}

int run_text(const std::string& source, const std::string& name, const RunCommandOptions& options,
             std::ostream& out, std::ostream& err) {
  Program program;
  try {
    program = parse_source(source);
  } catch (const SyntaxError& e) {
    report_syntax_error(e, name, err);
    return kExitSyntax;
  }

  if (!options.json) {
    RunResult r = run_source(source, RunSettings{options.r_compat_growth});
    out << r.output;
    return r.exit_code;
  }

  EvalOptions eval_options;
  eval_options.r_compat_growth = options.r_compat_growth;
  Interpreter interp(eval_options);
  json statements = json::array();
  std::vector<Diagnostic> diagnostics;
  for (std::size_t i = 0; i < program.exprs.size(); ++i) {
    EvalOutcome o = interp.eval_statement(*program.exprs[i], program.source);
    json s = {{"statement", i + 1}, {"line", o.span.start_line}, {"ok", o.ok()}, {"visible", o.visible}};
    if (o.result) {
      s["length"] = length_of(*o.result);
      s["mode"] = mode_of(*o.result);
      s["printed"] = print_value(*o.result);
    }
    statements.push_back(std::move(s));
    auto these = o.diagnostics();
    diagnostics.insert(diagnostics.end(), these.begin(), these.end());
    if (!o.ok()) break;
  }
  out << json{{"statements", statements}, {"diagnostics", json::parse(render_json(diagnostics))}}.dump(2)
      << "\n";
  return exit_for(diagnostics);
}

int cmd_check(const std::string& path, const CheckCommandOptions& options, std::ostream& out, std::ostream& err) {
  auto text = load(path, err);
  if (!text) return kExitIo;
  return check_text(source_of(*text), path, options, out, err);
}

int cmd_run(const std::string& path, const RunCommandOptions& options, std::ostream& out, std::ostream& err) {
  auto text = load(path, err);
  if (!text) return kExitIo;
  return run_text(source_of(*text), path, options, out, err);
}

int cmd_diff(const std::string& path, const DiffCommandOptions& options, std::ostream& out, std::ostream& err) {
  if (!fs::exists(path)) {
    err << "rvec-check: no such file or directory: " << path << "\n";
    return kExitIo;
  }
  std::vector<std::pair<std::string, std::string>> cases;
  for (const auto& file : corpus_files(path)) {
    auto text = load(file.string(), err);
    if (!text) return kExitIo;
    try {
      cases.emplace_back(file.filename().string(), source_of(*text));
    } catch (const std::exception& e) {
      err << "rvec-check: " << e.what() << "\n";
      return kExitIo;
    }
  }

  std::size_t agree = 0, weaker = 0, mismatch = 0;
  out << std::left << std::setw(28) << "case" << std::setw(6) << "stmt" << std::setw(6) << "line" << std::setw(24)
      << "predicted" << std::setw(9) << "runtime" << "verdict\n";
  for (const auto& [name, source] : cases) {
    DiffReport report = diff_source(source, name);
    if (!report.error.empty()) {
      err << name << ": " << report.error;
      return kExitSyntax;
    }
    for (const auto& row : report.rows) {
      switch (row.verdict) {
        case Verdict::Agree: ++agree; break;
        case Verdict::CheckerWeaker: ++weaker; break;
        case Verdict::Mismatch: ++mismatch; break;
      }
      if (!options.verbose && row.verdict == Verdict::Agree) continue;
      std::string runtime = row.runtime_length ? std::to_string(*row.runtime_length) : "error";
      out << std::left << std::setw(28) << name << std::setw(6) << row.statement << std::setw(6) << row.line
          << std::setw(24) << row.predicted << std::setw(9) << runtime << verdict_name(row.verdict);
      if (!row.reason.empty()) out << "  (" << row.reason << ")";
      out << "\n";
    }
  }
  out << "summary: " << cases.size() << " case(s), " << agree << " agree, " << weaker << " checker-weaker, "
      << mismatch << " MISMATCH\n";

  bool self_test_ok = true;
  if (options.self_test) {
    CheckOptions mutated;
    mutated.mutation = Mutation::BinopMinLength;
    std::size_t detected = 0;
    for (const auto& [name, source] : cases) detected += diff_source(source, name, mutated).count(Verdict::Mismatch);
    self_test_ok = detected > 0;
    out << "self-test: mutated checker produced " << detected << " MISMATCH verdict(s): "
        << (self_test_ok ? "detected" : "NOT detected") << "\n";
  }
  return mismatch == 0 && self_test_ok ? kExitClean : kExitErrors;
}

}  // namespace rvec
