#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rvec/commands.hpp"
#include "rvec/corpus.hpp"
#include "rvec/syntax.hpp"

namespace py = pybind11;
using namespace rvec;

namespace {

struct CommandResult {
  int exit_code;
  std::string out;
  std::string err;
};

py::dict span_dict(const SourceSpan& s) {
  py::dict d;
  d["line"] = s.start_line;
  d["col"] = s.start_col;
  d["end_line"] = s.end_line;
  d["end_col"] = s.end_col;
  return d;
}

py::list tokens(const std::string& source) {
  py::list out;
  for (const auto& t : tokenize(source)) {
    py::dict d = span_dict(t.span);
    d["kind"] = std::string(token_kind_name(t.kind));
    d["text"] = t.text;
    out.append(std::move(d));
  }
  return out;
}

std::vector<std::string> parse_trees(const std::string& source) {
  std::vector<std::string> out;
  for (const auto& e : parse_source(source).exprs) out.push_back(dump_tree(*e));
  return out;
}

CommandResult check(const std::string& source, bool types, bool strict_recycle, const std::string& name) {
  std::ostringstream out, err;
  CheckCommandOptions o;
  o.json = true;
  o.types = types;
  o.strict_recycle = strict_recycle;
  int code = check_text(source, name, o, out, err);
  return {code, out.str(), err.str()};
}

CommandResult run(const std::string& source, bool json, bool r_compat_growth, const std::string& name) {
  std::ostringstream out, err;
  RunCommandOptions o;
  o.json = json;
  o.r_compat_growth = r_compat_growth;
  int code = run_text(source, name, o, out, err);
  return {code, out.str(), err.str()};
}

py::list diff(const std::string& source) {
  DiffReport report = diff_source(source, "<string>");
  if (!report.error.empty()) throw SyntaxError({}, report.error);
  py::list rows;
  for (const auto& r : report.rows) {
    py::dict d;
    d["statement"] = r.statement;
    d["line"] = r.line;
    d["predicted"] = r.predicted;
    d["runtime_length"] = r.runtime_length ? py::cast(*r.runtime_length) : py::none();
    d["verdict"] = std::string(verdict_name(r.verdict));
    d["reason"] = r.reason;
    rows.append(std::move(d));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_rvec, m) {
  m.doc() = "Parser, interpreter and shape checker for a small R vector subset";

  static py::exception<SyntaxError> syntax_error(m, "RSyntaxError", PyExc_SyntaxError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SyntaxError& e) {
      std::string msg = e.what();
      msg += " at " + to_string(e.span());
      py::set_error(syntax_error, msg.c_str());
    }
  });

  py::class_<CommandResult>(m, "CommandResult")
      .def_readonly("exit_code", &CommandResult::exit_code)
      .def_readonly("out", &CommandResult::out)
      .def_readonly("err", &CommandResult::err)
      .def("__repr__", [](const CommandResult& r) {
        return "CommandResult(exit_code=" + std::to_string(r.exit_code) + ")";
      });

  m.def("tokenize", &tokens, py::arg("source"));
  m.def("parse", &parse_trees, py::arg("source"), "S-expression dump of each top-level statement");
  m.def(
      "deparse", [](const std::string& source) { return pretty_print(parse_source(source)); }, py::arg("source"));
  m.def("check", &check, py::arg("source"), py::kw_only(), py::arg("types") = false,
        py::arg("strict_recycle") = false, py::arg("name") = "<string>");
  m.def("run", &run, py::arg("source"), py::kw_only(), py::arg("json") = false, py::arg("r_compat_growth") = false,
        py::arg("name") = "<string>");
  m.def("diff", &diff, py::arg("source"));

  m.attr("EXIT_CLEAN") = static_cast<int>(kExitClean);
  m.attr("EXIT_WARNINGS") = static_cast<int>(kExitWarnings);
  m.attr("EXIT_ERRORS") = static_cast<int>(kExitErrors);
  m.attr("EXIT_SYNTAX") = static_cast<int>(kExitSyntax);
  m.attr("EXIT_IO") = static_cast<int>(kExitIo);
}
