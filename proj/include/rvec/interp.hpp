#pragma once

// Tree-walking reference interpreter. Each top-level statement produces an
// EvalOutcome; an error aborts only the statement it occurs in.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rvec/diagnostics.hpp"
#include "rvec/syntax.hpp"
#include "rvec/values.hpp"
#include "rvec/vector_ops.hpp"

namespace rvec {

struct EvalOptions {
  // Out-of-bounds subscript-assignment extends the vector with NA, as R does.
  bool r_compat_growth = false;
  int max_call_depth = 1000;
  // Skip the remaining statements after the first error.
  bool stop_on_error = false;
};

struct EvalOutcome {
  std::optional<RValue> result;  // empty when the statement failed
  bool visible = true;
  std::vector<Diagnostic> warnings;
  std::optional<Diagnostic> error;
  SourceSpan span;

  bool ok() const { return !error.has_value(); }
  // Warnings in order, then the error if any.
  std::vector<Diagnostic> diagnostics() const;
};

class Interpreter {
 public:
  explicit Interpreter(EvalOptions options = {});
  ~Interpreter();
  Interpreter(const Interpreter&) = delete;
  Interpreter& operator=(const Interpreter&) = delete;

  // `source` is used for closure printing; may be null.
  EvalOutcome eval_statement(const Expr& expr, const std::shared_ptr<const std::string>& source = nullptr);
  std::vector<EvalOutcome> eval_program(const Program& program);

  // Applies a closure or builtin to already evaluated arguments. Errors are
  // thrown as RError; warnings are appended to `warnings`.
  RValue apply_function(const RValue& callee, const std::vector<RValue>& args, Warnings& warnings);

  const std::shared_ptr<Env>& global_env() const { return global_; }

 private:
  struct Frame;
  struct Failure;

  RValue eval(const Expr& expr, const std::shared_ptr<Env>& env);
  RValue eval_var(const Expr& expr, const Var& var, const std::shared_ptr<Env>& env);
  RValue eval_call(const Expr& expr, const Call& call, const std::shared_ptr<Env>& env);
  RValue eval_binop(const Expr& expr, const BinOp& op, const std::shared_ptr<Env>& env);
  RValue eval_index(const Expr& expr, const Index& index, const std::shared_ptr<Env>& env);
  RValue eval_index_assign(const Expr& expr, const IndexAssign& ia, const std::shared_ptr<Env>& env);
  RValue make_closure(const Expr& expr, const FunctionDef& def, const std::shared_ptr<Env>& env);
  RValue call_closure(const Closure& closure, const std::vector<RValue>& args, const Expr* call_expr);

  [[noreturn]] void fail(const Condition& cond, const SourceSpan& span, const Expr* call_expr);
  void record_warnings(const Warnings& warnings, const SourceSpan& span, const Expr& call_expr);

  EvalOptions options_;
  std::shared_ptr<Env> global_;
  std::shared_ptr<const std::string> source_;
  std::vector<Frame> frames_;
  std::vector<Diagnostic> pending_warnings_;
  bool visible_ = true;
  // Every frame created, so reference cycles through closures can be broken.
  std::vector<std::weak_ptr<Env>> created_envs_;
};

std::vector<EvalOutcome> eval_program(const Program& program, EvalOptions options = {});

// Builtin semantics on evaluated arguments (arity already checked).
RValue builtin_dispatch(Builtin builtin, const std::vector<RValue>& args, Warnings& warnings);

// Formal parameter names of a builtin, used for arity errors.
std::vector<std::string> builtin_params(Builtin builtin);
bool builtin_is_variadic(Builtin builtin);

}  // namespace rvec
