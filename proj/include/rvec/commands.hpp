#pragma once

// The rvec-check subcommands, writing to caller-supplied streams.
// Exit codes: 0 clean, 1 warnings only, 2 errors, 3 parse/lex failure,
// 4 I/O failure.

#include <ostream>
#include <string>

#include "rvec/shapecheck.hpp"

namespace rvec {

enum ExitCode : int {
  kExitClean = 0,
  kExitWarnings = 1,
  kExitErrors = 2,
  kExitSyntax = 3,
  kExitIo = 4,
};

struct CheckCommandOptions {
  bool json = false;
  bool types = false;
  bool strict_recycle = false;
};

struct RunCommandOptions {
  bool json = false;
  bool r_compat_growth = false;
};

struct DiffCommandOptions {
  bool verbose = false;
  // Also run the harness against a deliberately broken checker and require
  // that it reports at least one MISMATCH.
  bool self_test = false;
};

int check_text(const std::string& source, const std::string& name, const CheckCommandOptions& options,
               std::ostream& out, std::ostream& err);
int run_text(const std::string& source, const std::string& name, const RunCommandOptions& options,
             std::ostream& out, std::ostream& err);

int cmd_check(const std::string& path, const CheckCommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_run(const std::string& path, const RunCommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_diff(const std::string& path, const DiffCommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace rvec
