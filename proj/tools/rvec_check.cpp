#include <iostream>

#include "CLI11.hpp"
#include "rvec/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Static shape checker and reference interpreter for a subset of R"};
  app.require_subcommand(1);

  std::string path;
  rvec::CheckCommandOptions check_opts;
  auto* check = app.add_subcommand("check", "Report static diagnostics");
  check->add_option("file", path, "R source file")->required();
  check->add_flag("--json", check_opts.json, "Emit diagnostics as JSON");
  check->add_flag("--types", check_opts.types, "Print each statement's inferred type");
  check->add_flag("--strict-recycle", check_opts.strict_recycle, "Treat recycling warnings as errors");

  rvec::RunCommandOptions run_opts;
  auto* run = app.add_subcommand("run", "Evaluate a program and print its values");
  run->add_option("file", path, "R source file")->required();
  run->add_flag("--json", run_opts.json, "Emit statement results and diagnostics as JSON");
  run->add_flag("--r-compat-growth", run_opts.r_compat_growth,
                "Let out-of-bounds subscript-assignment grow the vector");

  rvec::DiffCommandOptions diff_opts;
  auto* diff = app.add_subcommand("diff", "Compare checker predictions with interpreter results");
  diff->add_option("path", path, "R file or directory of .R cases")->required();
  diff->add_flag("-v,--verbose", diff_opts.verbose, "List every statement, not only disagreements");
  diff->add_flag("--self-test", diff_opts.self_test, "Verify that a mutated checker is caught");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : rvec::kExitIo;
  }

  if (*check) return rvec::cmd_check(path, check_opts, std::cout, std::cerr);
  if (*run) return rvec::cmd_run(path, run_opts, std::cout, std::cerr);
  return rvec::cmd_diff(path, diff_opts, std::cout, std::cerr);
}
