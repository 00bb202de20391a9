#include "rvec/interp.hpp"

#include <cmath>

namespace rvec {

struct Interpreter::Frame {
  const Expr* call_expr;  // the call that created the frame
};

struct Interpreter::Failure {
  Diagnostic diagnostic;
};

namespace {

// Clears the frame stack entry on scope exit, including unwinding.
template <typename F>
struct ScopeExit {
  F f;
  ~ScopeExit() { f(); }
};
template <typename F>
ScopeExit(F) -> ScopeExit<F>;

RValue length_value(std::size_t n) { return make_vector(Mode::Numeric, {static_cast<double>(n)}); }

std::string call_text(const Condition& cond, const Expr* call_expr) {
  if (call_expr == nullptr || !catalog_entry(cond.code).shows_call) return {};
  return deparse_call(*call_expr);
}

}  // namespace

std::vector<Diagnostic> EvalOutcome::diagnostics() const {
  std::vector<Diagnostic> out = warnings;
  if (error) out.push_back(*error);
  return out;
}

std::vector<std::string> builtin_params(Builtin builtin) {
  switch (builtin) {
    case Builtin::Combine: return {};
    case Builtin::Array:
    case Builtin::Matrix: return {"data", "dim"};
    case Builtin::Mode:
    case Builtin::Length: return {"x"};
  }
  return {};
}

bool builtin_is_variadic(Builtin builtin) { return builtin == Builtin::Combine; }

RValue builtin_dispatch(Builtin builtin, const std::vector<RValue>& args, Warnings& warnings) {
  switch (builtin) {
    case Builtin::Combine: return combine(args);
    case Builtin::Array: return construct_array(args.at(1), args.at(0));
    case Builtin::Matrix: return construct_matrix(args.at(1), args.at(0), warnings);
    case Builtin::Mode: return make_vector(Mode::Character, {mode_of(args.at(0))});
    case Builtin::Length: return length_value(length_of(args.at(0)));
  }
  throw std::logic_error("unknown builtin");
}

Interpreter::Interpreter(EvalOptions options)
    : options_(options), global_(std::make_shared<Env>()) {}

Interpreter::~Interpreter() {
  // Closures hold their defining frame and frames hold closures.
  for (auto& weak : created_envs_) {
    if (auto env = weak.lock()) env->clear();
  }
  global_->clear();
}

void Interpreter::fail(const Condition& cond, const SourceSpan& span, const Expr* call_expr) {
  throw Failure{make_diagnostic(cond, span, Phase::Runtime, call_text(cond, call_expr))};
}

void Interpreter::record_warnings(const Warnings& warnings, const SourceSpan& span, const Expr& call_expr) {
  for (const auto& w : warnings) {
    pending_warnings_.push_back(make_diagnostic(w, span, Phase::Runtime, call_text(w, &call_expr)));
  }
}

EvalOutcome Interpreter::eval_statement(const Expr& expr, const std::shared_ptr<const std::string>& source) {
  source_ = source;
  pending_warnings_.clear();
  frames_.clear();
  visible_ = true;
  EvalOutcome outcome;
  outcome.span = expr.span;
  try {
    outcome.result = eval(expr, global_);
    outcome.visible = visible_ || expr.parens > 0;
  } catch (Failure& f) {
    outcome.error = std::move(f.diagnostic);
    outcome.visible = false;
  }
  outcome.warnings = std::move(pending_warnings_);
  pending_warnings_.clear();
  return outcome;
}

std::vector<EvalOutcome> Interpreter::eval_program(const Program& program) {
  std::vector<EvalOutcome> outcomes;
  for (const auto& stmt : program.exprs) {
    outcomes.push_back(eval_statement(*stmt, program.source));
    if (options_.stop_on_error && !outcomes.back().ok()) break;
  }
  return outcomes;
}

std::vector<EvalOutcome> eval_program(const Program& program, EvalOptions options) {
  Interpreter interp(options);
  return interp.eval_program(program);
}

RValue Interpreter::eval(const Expr& expr, const std::shared_ptr<Env>& env) {
  visible_ = true;
  return std::visit(
      [&](const auto& node) -> RValue {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, NumLit>) {
          return make_vector(Mode::Numeric, {node.value});
        } else if constexpr (std::is_same_v<T, StrLit>) {
          return make_vector(Mode::Character, {node.value});
        } else if constexpr (std::is_same_v<T, LogicalLit>) {
          return make_vector(Mode::Logical, {node.value});
        } else if constexpr (std::is_same_v<T, NaLit>) {
          return make_vector(Mode::Logical, {na()});
        } else if constexpr (std::is_same_v<T, NullLit>) {
          return Null{};
        } else if constexpr (std::is_same_v<T, Var>) {
          return eval_var(expr, node, env);
        } else if constexpr (std::is_same_v<T, Call>) {
          return eval_call(expr, node, env);
        } else if constexpr (std::is_same_v<T, FunctionDef>) {
          return make_closure(expr, node, env);
        } else if constexpr (std::is_same_v<T, Assign>) {
          RValue value = eval(*node.value, env);
          env->assign(node.target, value);
          visible_ = false;
          return value;
        } else if constexpr (std::is_same_v<T, Index>) {
          return eval_index(expr, node, env);
        } else if constexpr (std::is_same_v<T, IndexAssign>) {
          return eval_index_assign(expr, node, env);
        } else {
          return eval_binop(expr, node, env);
        }
      },
      expr.node);
}

RValue Interpreter::eval_var(const Expr& expr, const Var& var, const std::shared_ptr<Env>& env) {
  const RValue* found = nullptr;
  switch (env->lookup(var.name, &found)) {
    case LookupStatus::Found: return *found;
    case LookupStatus::Missing:
      fail(missing_argument(var.name), expr.span, frames_.empty() ? nullptr : frames_.back().call_expr);
    case LookupStatus::Unbound: break;
  }
  if (auto b = builtin_from_name(var.name)) {
    Closure c;
    c.builtin = *b;
    return c;
  }
  fail(unbound_variable(var.name), expr.span, nullptr);
}

RValue Interpreter::make_closure(const Expr& expr, const FunctionDef& def, const std::shared_ptr<Env>& env) {
  Closure c;
  c.params = def.params;
  c.body = def.body;
  c.env = env;
  if (source_ && expr.span.end <= source_->size()) {
    c.source = source_->substr(expr.span.begin, expr.span.end - expr.span.begin);
  } else {
    c.source = deparse(expr);
  }
  if (env != global_) created_envs_.push_back(env);
  return c;
}

RValue Interpreter::eval_call(const Expr& expr, const Call& call, const std::shared_ptr<Env>& env) {
  RValue callee;
  if (const auto* name = call.callee->as<Var>()) {
    const RValue* found = nullptr;
    switch (env->lookup(name->name, &found)) {
      case LookupStatus::Found: callee = *found; break;
      case LookupStatus::Missing:
        fail(missing_argument(name->name), call.callee->span,
             frames_.empty() ? nullptr : frames_.back().call_expr);
      case LookupStatus::Unbound:
        if (auto b = builtin_from_name(name->name)) {
          Closure c;
          c.builtin = *b;
          callee = std::move(c);
        } else {
          throw Failure{make_diagnostic(
              Condition{Code::E_UNBOUND, "could not find function \"" + name->name + "\""}, call.callee->span,
              Phase::Runtime, deparse_call(expr))};
        }
        break;
    }
  } else {
    callee = eval(*call.callee, env);
  }

  std::vector<RValue> args;
  args.reserve(call.args.size());
  for (const auto& a : call.args) args.push_back(eval(*a, env));

  const auto* closure = std::get_if<Closure>(&callee);
  if (closure == nullptr) fail(make_condition(Code::E_NOTFUN), expr.span, &expr);

  if (closure->builtin) {
    Builtin b = *closure->builtin;
    std::vector<std::string> params = builtin_params(b);
    if (!builtin_is_variadic(b)) {
      if (args.size() > params.size()) {
        std::vector<std::string> extra;
        for (std::size_t i = params.size(); i < call.args.size(); ++i) extra.push_back(deparse(*call.args[i]));
        fail(unused_arguments(extra), expr.span, &expr);
      }
      if (args.size() < params.size()) fail(missing_argument(params[args.size()]), expr.span, &expr);
    }
    Warnings warnings;
    RValue result;
    try {
      result = builtin_dispatch(b, args, warnings);
    } catch (const RError& e) {
      fail(e.condition(), expr.span, &expr);
    }
    record_warnings(warnings, expr.span, expr);
    visible_ = true;
    return result;
  }

  if (args.size() > closure->params.size()) {
    std::vector<std::string> extra;
    for (std::size_t i = closure->params.size(); i < call.args.size(); ++i) extra.push_back(deparse(*call.args[i]));
    fail(unused_arguments(extra), expr.span, &expr);
  }
  return call_closure(*closure, args, &expr);
}

RValue Interpreter::call_closure(const Closure& closure, const std::vector<RValue>& args, const Expr* call_expr) {
  if (static_cast<int>(frames_.size()) >= options_.max_call_depth) {
    fail(make_condition(Code::E_RECURSION_LIMIT), call_expr != nullptr ? call_expr->span : SourceSpan{}, nullptr);
  }
  auto frame = std::make_shared<Env>(closure.env);
  for (std::size_t i = 0; i < closure.params.size(); ++i) {
    if (i < args.size()) {
      frame->assign(closure.params[i], args[i]);
    } else {
      frame->bind_missing(closure.params[i]);
    }
  }
  frames_.push_back(Frame{call_expr});
  ScopeExit pop{[this] { frames_.pop_back(); }};
  RValue result = Null{};
  for (const auto& stmt : closure.body) result = eval(*stmt, frame);
  return result;
}

RValue Interpreter::apply_function(const RValue& callee, const std::vector<RValue>& args, Warnings& warnings) {
  const auto* closure = std::get_if<Closure>(&callee);
  if (closure == nullptr) throw RError(make_condition(Code::E_NOTFUN));
  if (closure->builtin) {
    std::vector<std::string> params = builtin_params(*closure->builtin);
    if (!builtin_is_variadic(*closure->builtin)) {
      if (args.size() > params.size()) {
        std::vector<std::string> extra(args.size() - params.size(), "...");
        throw RError(unused_arguments(extra));
      }
      if (args.size() < params.size()) throw RError(missing_argument(params[args.size()]));
    }
    return builtin_dispatch(*closure->builtin, args, warnings);
  }
  if (args.size() > closure->params.size()) {
    std::vector<std::string> extra(args.size() - closure->params.size(), "...");
    throw RError(unused_arguments(extra));
  }
  auto saved = std::move(pending_warnings_);
  pending_warnings_.clear();
  try {
    RValue result = call_closure(*closure, args, nullptr);
    for (const auto& w : pending_warnings_) warnings.push_back(Condition{w.code, w.message});
    pending_warnings_ = std::move(saved);
    return result;
  } catch (Failure& f) {
    pending_warnings_ = std::move(saved);
    throw RError(Condition{f.diagnostic.code, f.diagnostic.message});
  }
}

RValue Interpreter::eval_binop(const Expr& expr, const BinOp& op, const std::shared_ptr<Env>& env) {
  RValue lhs = eval(*op.lhs, env);
  RValue rhs = eval(*op.rhs, env);
  Warnings warnings;
  RValue result;
  try {
    result = apply_binary(op.op, lhs, rhs, warnings);
  } catch (const RError& e) {
    fail(e.condition(), op.op_span, &expr);
  }
  record_warnings(warnings, op.op_span, expr);
  visible_ = true;
  return result;
}

RValue Interpreter::eval_index(const Expr& expr, const Index& index, const std::shared_ptr<Env>& env) {
  RValue base = eval(*index.base, env);
  RValue sub = eval(*index.subscript, env);
  try {
    RValue result = index_get(base, sub);
    visible_ = true;
    return result;
  } catch (const RError& e) {
    fail(e.condition(), expr.span, &expr);
  }
}

RValue Interpreter::eval_index_assign(const Expr& expr, const IndexAssign& ia, const std::shared_ptr<Env>& env) {
  // R evaluates the right-hand side before looking at the target.
  RValue repl = eval(*ia.replacement, env);
  const RValue* found = nullptr;
  switch (env->lookup(ia.base, &found)) {
    case LookupStatus::Found: break;
    case LookupStatus::Missing:
      fail(missing_argument(ia.base), ia.base_span, frames_.empty() ? nullptr : frames_.back().call_expr);
    case LookupStatus::Unbound: fail(unbound_variable(ia.base), ia.base_span, nullptr);
  }
  RValue base = *found;
  RValue sub = eval(*ia.subscript, env);
  Warnings warnings;
  RValue updated;
  try {
    updated = index_assign(base, sub, repl, AssignPolicy{options_.r_compat_growth}, warnings);
  } catch (const RError& e) {
    fail(e.condition(), expr.span, &expr);
  }
  record_warnings(warnings, expr.span, expr);
  env->assign(ia.base, std::move(updated));
  visible_ = false;
  return repl;
}

}  // namespace rvec
