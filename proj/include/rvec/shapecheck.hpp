#pragma once

// Static shape checker. Each rule maps argument AbsTypes to a result AbsType
// and appends the conditions it can prove; the driver places them at source
// spans. A Bottom argument short-circuits every rule.

#include <span>
#include <vector>

#include "rvec/abstract_type.hpp"
#include "rvec/diagnostics.hpp"
#include "rvec/syntax.hpp"

namespace rvec {

// Deliberate rule perturbations for the diff harness self-test.
enum class Mutation {
  None,
  BinopMinLength,       // binop result length uses min instead of max
  SkipReplaceMultiple,  // never report W_REPLACE_NONMULTIPLE
};

struct CheckOptions {
  // Report the recycling warnings as errors.
  bool strict_recycle = false;
  Mutation mutation = Mutation::None;
  int max_call_depth = 8;
  // Total function-body analyses per program before results degrade to Top.
  std::size_t call_budget = 20000;
};

using Findings = std::vector<Condition>;

AbsType t_combine(std::span<const AbsType> args, Findings& out);
AbsType t_binop(BinaryOp op, const AbsType& lhs, const AbsType& rhs, Findings& out,
                const CheckOptions& options = {});
AbsType t_array(const AbsType& shape, const AbsType& elems, Findings& out);
AbsType t_matrix(const AbsType& shape, const AbsType& elems, Findings& out);
AbsType t_subscript(const AbsType& base, const AbsType& sub, Findings& out);
AbsType t_subscript_assign(const AbsType& base, const AbsType& sub, const AbsType& repl, Findings& out,
                           const CheckOptions& options = {});

struct StatementCheck {
  AbsType type;
  std::vector<Diagnostic> diagnostics;
  // Every intermediate value was known exactly (size and contents), so the
  // runtime behaviour of the statement is fully predicted.
  bool precise = true;
  SourceSpan span;
};

struct CheckReport {
  std::vector<Diagnostic> diagnostics;  // all statements, duplicates removed
  std::vector<AbsType> statement_types;
  std::vector<StatementCheck> statements;

  bool has_errors() const;
  bool has_warnings() const;
};

CheckReport check_program(const Program& program, const CheckOptions& options = {});

}  // namespace rvec
