#include "rvec/shapecheck.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rvec/interp.hpp"
#include "rvec/vector_ops.hpp"

namespace rvec {

namespace {

bool any_bottom(std::initializer_list<const AbsType*> ts) {
  return std::any_of(ts.begin(), ts.end(), [](const AbsType* t) { return t->is_bottom(); });
}

bool any_top(std::initializer_list<const AbsType*> ts) {
  return std::any_of(ts.begin(), ts.end(), [](const AbsType* t) { return t->is_top(); });
}

AbsType fail(Findings& out, Condition cond) {
  out.push_back(std::move(cond));
  return AbsType::bottom();
}

// Runs the concrete operation on exact arguments; errors become findings.
template <typename Op>
AbsType fold(Findings& out, Op&& op) {
  Warnings warnings;
  try {
    RValue v = op(warnings);
    out.insert(out.end(), warnings.begin(), warnings.end());
    return abstract_value(v);
  } catch (const RError& e) {
    out.insert(out.end(), warnings.begin(), warnings.end());
    return fail(out, e.condition());
  }
}

RValue exact(const AbsType& t) { return *concrete_value(t); }

struct SubscriptScan {
  bool any_positive = false;
  bool any_negative = false;
  bool any_na = false;
  bool any_zero = false;
  std::size_t nonzero = 0;
  double max_positive = 0;
  std::set<double> excluded;  // magnitudes of negative entries
};

SubscriptScan scan_numeric(const std::vector<Scalar>& xs) {
  SubscriptScan s;
  for (const auto& x : xs) {
    std::optional<double> d;
    if (const auto* p = std::get_if<double>(&x)) {
      if (!std::isnan(*p)) d = *p;
    } else if (const auto* b = std::get_if<bool>(&x)) {
      d = *b ? 1.0 : 0.0;
    }
    if (!d) {
      s.any_na = true;
      ++s.nonzero;
      continue;
    }
    double t = std::trunc(*d);
    if (t > 0) {
      s.any_positive = true;
      s.max_positive = std::max(s.max_positive, t);
      ++s.nonzero;
    } else if (t < 0) {
      s.any_negative = true;
      s.excluded.insert(-t);
      ++s.nonzero;
    } else {
      s.any_zero = true;
    }
  }
  return s;
}

std::size_t excluded_count(const SubscriptScan& s, std::size_t n) {
  return static_cast<std::size_t>(std::count_if(s.excluded.begin(), s.excluded.end(),
                                                [n](double k) { return k >= 1 && k <= static_cast<double>(n); }));
}

// Number of positions a logical mask selects (TRUE or NA) over max(n, len).
struct MaskScan {
  std::size_t selected = 0;
  bool any_na = false;
  bool selects_past_end = false;
};

MaskScan scan_mask(const std::vector<Scalar>& mask, std::size_t n) {
  MaskScan m;
  if (mask.empty()) return m;
  std::size_t len = std::max(n, mask.size());
  for (std::size_t p = 0; p < len; ++p) {
    const Scalar& x = mask[p % mask.size()];
    bool na_here = is_na(x);
    if (na_here) m.any_na = true;
    if (na_here || std::get<bool>(x)) {
      ++m.selected;
      if (p >= n) m.selects_past_end = true;
    }
  }
  return m;
}

std::optional<std::vector<AbsSize>> known_dims_of(const AbsType& t) {
  if (t.kind != AbsKind::Array) return std::nullopt;
  return t.dims;
}

bool dims_fully_known(const std::optional<std::vector<AbsSize>>& dims) {
  return dims && std::all_of(dims->begin(), dims->end(), [](const AbsSize& d) { return d.is_known(); });
}

Condition not_subsettable() {
  return Condition{Code::E_BADSUBSCRIPT, "object of type 'closure' is not subsettable"};
}

}  // namespace

AbsType t_combine(std::span<const AbsType> args, Findings& out) {
  for (const auto& a : args) {
    if (a.is_bottom()) return AbsType::bottom();
  }
  for (const auto& a : args) {
    if (a.is_closure()) return fail(out, make_condition(Code::E_BADCOMBINE));
  }
  for (const auto& a : args) {
    if (a.is_top()) return AbsType::top();
  }
  if (std::all_of(args.begin(), args.end(), [](const AbsType& a) { return a.is_exact(); })) {
    std::vector<RValue> values;
    for (const auto& a : args) values.push_back(exact(a));
    return fold(out, [&](Warnings&) { return combine(values); });
  }

  std::optional<Mode> mode;
  bool mode_known = true;
  std::size_t total = 0;
  bool size_known = true;
  for (const auto& a : args) {
    if (a.is_null()) continue;
    if (!a.mode) {
      mode_known = false;
    } else {
      mode = mode ? mode_lub(*mode, *a.mode) : *a.mode;
    }
    if (a.size.is_known()) {
      total += a.size.value();
    } else {
      size_known = false;
    }
  }
  if (size_known && total == 0) return AbsType::null();
  return AbsType::vector(mode_known ? mode : std::nullopt,
                         size_known ? AbsSize::known(total) : AbsSize::unknown());
}

AbsType t_binop(BinaryOp op, const AbsType& lhs, const AbsType& rhs, Findings& out, const CheckOptions& options) {
  if (any_bottom({&lhs, &rhs})) return AbsType::bottom();
  const bool logical_op = op == BinaryOp::And || op == BinaryOp::Or;
  const Code type_error = logical_op ? Code::E_NONLOGICAL : Code::E_NONNUMERIC;
  const Mode result_mode = is_arithmetic(op) ? Mode::Numeric : Mode::Logical;

  if (lhs.is_closure() || rhs.is_closure()) return fail(out, make_condition(type_error));
  if (any_top({&lhs, &rhs})) return AbsType::top();
  if (!is_comparison(op) && (lhs.mode == Mode::Character || rhs.mode == Mode::Character)) {
    return fail(out, make_condition(type_error));
  }
  auto ldims = known_dims_of(lhs);
  auto rdims = known_dims_of(rhs);
  if (dims_fully_known(ldims) && dims_fully_known(rdims) && *ldims != *rdims) {
    return fail(out, make_condition(Code::E_DIMS_MISMATCH));
  }

  AbsType result;
  if (lhs.is_exact() && rhs.is_exact()) {
    result = fold(out, [&](Warnings& w) { return apply_binary(op, exact(lhs), exact(rhs), w); });
    if (result.is_bottom()) return result;
  } else if ((lhs.size == AbsSize::known(0)) || (rhs.size == AbsSize::known(0))) {
    result = AbsType::vector(result_mode, AbsSize::known(0));
    result.contents = std::vector<Scalar>{};
  } else if (lhs.size.is_known() && rhs.size.is_known()) {
    std::size_t a = lhs.size.value();
    std::size_t b = rhs.size.value();
    // A plain vector may not be longer than the array it combines with.
    const bool larr = lhs.kind == AbsKind::Array;
    const bool rarr = rhs.kind == AbsKind::Array;
    const AbsType* array_side = larr ? &lhs : (rarr ? &rhs : nullptr);
    if (array_side != nullptr && !(larr && rarr)) {
      std::size_t arr = array_side->size.value();
      std::size_t vec = array_side == &lhs ? b : a;
      if (vec > arr) {
        return fail(out, Condition{Code::E_DIMS_MISMATCH, "dims [product " + std::to_string(arr) +
                                                              "] do not match the length of object [" +
                                                              std::to_string(vec) + "]"});
      }
    }
    std::size_t n = std::max(a, b);
    if (n % std::min(a, b) != 0) out.push_back(make_condition(Code::W_NONMULTIPLE));
    if (array_side != nullptr) {
      result = AbsType::array(result_mode, array_side->dims);
    } else {
      result = AbsType::vector(result_mode, AbsSize::known(n));
    }
  } else if (lhs.kind == AbsKind::Array || rhs.kind == AbsKind::Array) {
    result = AbsType::array(result_mode, std::nullopt);
  } else {
    result = AbsType::vector(result_mode, AbsSize::unknown());
  }

  if (options.mutation == Mutation::BinopMinLength && lhs.size.is_known() && rhs.size.is_known() &&
      lhs.size.value() > 0 && rhs.size.value() > 0) {
    result = AbsType::vector(result_mode, AbsSize::known(std::min(lhs.size.value(), rhs.size.value())));
  }
  return result;
}

AbsType t_array(const AbsType& shape, const AbsType& elems, Findings& out) {
  if (any_bottom({&shape, &elems})) return AbsType::bottom();
  if (elems.is_closure()) {
    return fail(out, Condition{Code::E_NULLDATA, "'data' must be of a vector type, was 'closure'"});
  }
  if (elems.is_null() || elems.size == AbsSize::known(0)) return fail(out, make_condition(Code::E_NULLDATA));
  if (shape.is_closure() || shape.is_null() || shape.size == AbsSize::known(0) || shape.mode == Mode::Character) {
    return fail(out, make_condition(Code::E_BADDIMS));
  }
  if (shape.is_top()) return AbsType::top();
  if (shape.has_contents() && (shape.sign == SignInfo::Mixed || shape.sign == SignInfo::AllNonPos)) {
    // Any negative witness is invalid.
    return fail(out, make_condition(Code::E_BADDIMS));
  }
  if (shape.is_exact() && elems.is_exact()) {
    return fold(out, [&](Warnings&) { return construct_array(exact(shape), exact(elems)); });
  }

  std::optional<Mode> mode = elems.is_top() ? std::nullopt : elems.mode;
  if (shape.has_contents()) {
    std::vector<AbsSize> dims;
    try {
      for (auto d : validate_dims(exact(shape))) dims.push_back(AbsSize::known(d));
    } catch (const RError& e) {
      return fail(out, e.condition());
    }
    return AbsType::array(mode, std::move(dims));
  }
  if (shape.size.is_known()) {
    return AbsType::array(mode, std::vector<AbsSize>(shape.size.value(), AbsSize::unknown()));
  }
  return AbsType::array(mode, std::nullopt);
}

AbsType t_matrix(const AbsType& shape, const AbsType& elems, Findings& out) {
  if (any_bottom({&shape, &elems})) return AbsType::bottom();
  if (shape.is_closure() || shape.is_null()) return fail(out, make_condition(Code::E_MATRIX_DIMS));
  if (shape.is_top()) return AbsType::top();

  AbsType effective = shape;
  if (shape.size.is_known() && shape.size.value() != 2) {
    out.push_back(make_condition(Code::E_MATRIX_DIMS));
    if (shape.size.value() < 2) return AbsType::bottom();
    // The runtime keeps going with the first two dimensions.
    if (shape.has_contents()) {
      std::vector<Scalar> first_two(shape.contents->begin(), shape.contents->begin() + 2);
      effective = abstract_value(RValue{Vector{*shape.mode, first_two}});
    } else {
      effective = AbsType::vector(shape.mode, AbsSize::known(2));
    }
  }
  AbsType result = t_array(effective, elems, out);
  if (result.kind == AbsKind::Array && !result.dims) {
    result.dims = std::vector<AbsSize>{AbsSize::unknown(), AbsSize::unknown()};
  }
  return result;
}

AbsType t_subscript(const AbsType& base, const AbsType& sub, Findings& out) {
  if (any_bottom({&base, &sub})) return AbsType::bottom();
  if (base.is_closure()) return fail(out, not_subsettable());
  if (base.is_null()) return AbsType::null();
  if (base.is_top()) return AbsType::top();

  if (sub.is_null()) {
    AbsType copy = base;
    copy.kind = AbsKind::Vector;
    copy.dims.reset();
    return copy;
  }
  if (sub.is_closure()) return fail(out, bad_subscript_type("closure"));
  if (sub.is_top()) return AbsType::top();
  if (sub.mode == Mode::Character) return fail(out, bad_subscript_type("character"));
  if (!sub.mode) return AbsType::top();

  AbsType unknown = AbsType::vector(base.mode, AbsSize::unknown());
  if (!sub.has_contents()) return unknown;
  const auto& xs = *sub.contents;
  const bool base_known = base.size.is_known();
  const std::size_t n = base_known ? base.size.value() : 0;

  if (*sub.mode == Mode::Logical) {
    if (base.is_exact()) return fold(out, [&](Warnings&) { return index_get(exact(base), exact(sub)); });
    if (!base_known) return unknown;
    return AbsType::vector(base.mode, AbsSize::known(scan_mask(xs, n).selected));
  }

  SubscriptScan s = scan_numeric(xs);
  if (s.any_negative && (s.any_positive || s.any_na)) return fail(out, make_condition(Code::E_MIXEDSIGNS));
  if (s.any_negative) {
    if (base.is_exact()) return fold(out, [&](Warnings&) { return index_get(exact(base), exact(sub)); });
    if (!base_known) return unknown;
    return AbsType::vector(base.mode, AbsSize::known(n - excluded_count(s, n)));
  }
  if (base_known && s.max_positive > static_cast<double>(n)) out.push_back(make_condition(Code::W_OOB_READ));
  if (s.any_zero) {
    out.push_back(make_condition(Code::W_ZERO_INDEX));
    return unknown;
  }
  if (base.is_exact()) return fold(out, [&](Warnings&) { return index_get(exact(base), exact(sub)); });
  if (!base_known) return unknown;
  return AbsType::vector(base.mode, AbsSize::known(xs.size()));
}

AbsType t_subscript_assign(const AbsType& base, const AbsType& sub, const AbsType& repl, Findings& out,
                           const CheckOptions& options) {
  if (any_bottom({&base, &sub, &repl})) return AbsType::bottom();
  if (base.is_closure()) return fail(out, not_subsettable());
  if (sub.is_closure()) return fail(out, bad_subscript_type("closure"));
  if (sub.mode == Mode::Character) return fail(out, bad_subscript_type("character"));
  if (repl.is_closure()) return fail(out, make_condition(Code::E_BADCOMBINE));
  if (repl.is_null() || repl.size == AbsSize::known(0)) return fail(out, make_condition(Code::E_NULLREPL));
  if (any_top({&base, &sub, &repl})) return AbsType::top();

  const bool base_known = base.size.is_known();
  const std::size_t n = base_known ? base.size.value() : 0;
  std::optional<std::size_t> targets;

  if (sub.is_null()) {
    if (base_known) targets = n;
  } else if (sub.has_contents() && sub.mode == Mode::Logical) {
    MaskScan m = scan_mask(*sub.contents, n);
    if (m.any_na) return fail(out, make_condition(Code::E_NA_SUBASSIGN));
    if (base_known) {
      if (m.selects_past_end) return fail(out, make_condition(Code::E_OOB_ASSIGN));
      targets = m.selected;
    }
  } else if (sub.has_contents()) {
    SubscriptScan s = scan_numeric(*sub.contents);
    if (s.any_negative && (s.any_positive || s.any_na)) return fail(out, make_condition(Code::E_MIXEDSIGNS));
    if (s.any_na) return fail(out, make_condition(Code::E_NA_SUBASSIGN));
    if (base_known) {
      if (s.any_negative) {
        targets = n - excluded_count(s, n);
      } else {
        if (s.max_positive > static_cast<double>(n)) return fail(out, make_condition(Code::E_OOB_ASSIGN));
        targets = s.nonzero;
      }
    }
  }

  const bool exact_inputs = base.is_exact() && sub.is_exact() && repl.is_exact();
  if (targets && repl.size.is_known() && *targets > 0 && *targets % repl.size.value() != 0 &&
      options.mutation != Mutation::SkipReplaceMultiple && !exact_inputs) {
    out.push_back(make_condition(Code::W_REPLACE_NONMULTIPLE));
  }
  if (exact_inputs) {
    Findings folded;
    AbsType r = fold(folded, [&](Warnings& w) {
      return index_assign(exact(base), exact(sub), exact(repl), AssignPolicy{false}, w);
    });
    for (auto& c : folded) {
      if (c.code == Code::W_REPLACE_NONMULTIPLE && options.mutation == Mutation::SkipReplaceMultiple) continue;
      out.push_back(std::move(c));
    }
    return r;
  }

  std::optional<Mode> mode;
  if (base.is_null()) {
    mode = repl.mode;
  } else if (base.mode && repl.mode) {
    mode = mode_lub(*base.mode, *repl.mode);
  }
  if (base.kind == AbsKind::Array) {
    AbsType r = AbsType::array(mode, base.dims);
    return r;
  }
  return AbsType::vector(mode, base.is_null() ? AbsSize::known(0) : base.size);
}

bool CheckReport::has_errors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

bool CheckReport::has_warnings() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Warning; });
}

namespace {

class Checker {
 public:
  explicit Checker(const CheckOptions& options) : options_(options), global_(std::make_shared<AbsEnv>()) {}

  ~Checker() {
    for (auto& weak : frames_) {
      if (auto env = weak.lock()) env->clear();
    }
    global_->clear();
  }

  StatementCheck check_statement(const Expr& expr) {
    diagnostics_.clear();
    precise_ = true;
    depth_ = 0;
    StatementCheck sc;
    sc.span = expr.span;
    sc.type = analyze(expr, global_);
    sc.diagnostics = std::move(diagnostics_);
    sc.precise = precise_;
    diagnostics_.clear();
    return sc;
  }

 private:
  void report(const Findings& findings, const SourceSpan& span) {
    for (const auto& c : findings) {
      Diagnostic d = make_diagnostic(c, span, Phase::Static);
      if (options_.strict_recycle && (c.code == Code::W_NONMULTIPLE || c.code == Code::W_REPLACE_NONMULTIPLE)) {
        d.severity = Severity::Error;
      }
      bool duplicate = std::any_of(diagnostics_.begin(), diagnostics_.end(), [&](const Diagnostic& e) {
        return e.code == d.code && e.span == d.span;
      });
      if (!duplicate) diagnostics_.push_back(std::move(d));
    }
  }

  AbsType report_one(Condition c, const SourceSpan& span) {
    report(Findings{std::move(c)}, span);
    return AbsType::bottom();
  }

  // Records whether a produced type leaves anything about the value open.
  AbsType note(AbsType t) {
    bool exact = t.is_bottom() || t.is_closure() || t.is_exact();
    if (!exact) precise_ = false;
    return t;
  }

  AbsType analyze(const Expr& expr, const std::shared_ptr<AbsEnv>& env) {
    return note(std::visit(
        [&](const auto& node) -> AbsType {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, NumLit>) {
            return abstract_value(RValue{Vector{Mode::Numeric, {node.value}}});
          } else if constexpr (std::is_same_v<T, StrLit>) {
            return abstract_value(RValue{Vector{Mode::Character, {node.value}}});
          } else if constexpr (std::is_same_v<T, LogicalLit>) {
            return abstract_value(RValue{Vector{Mode::Logical, {node.value}}});
          } else if constexpr (std::is_same_v<T, NaLit>) {
            return abstract_value(RValue{Vector{Mode::Logical, {na()}}});
          } else if constexpr (std::is_same_v<T, NullLit>) {
            return AbsType::null();
          } else if constexpr (std::is_same_v<T, Var>) {
            return analyze_var(expr, node.name, env);
          } else if constexpr (std::is_same_v<T, Call>) {
            return analyze_call(expr, node, env);
          } else if constexpr (std::is_same_v<T, FunctionDef>) {
            auto c = std::make_shared<AbsClosure>();
            c->params = node.params;
            c->body = node.body;
            c->env = env;
            if (env != global_) frames_.push_back(env);
            return AbsType::function(std::move(c));
          } else if constexpr (std::is_same_v<T, Assign>) {
            AbsType t = analyze(*node.value, env);
            if (!t.is_bottom()) env->assign(node.target, t);
            return t;
          } else if constexpr (std::is_same_v<T, Index>) {
            AbsType base = analyze(*node.base, env);
            if (base.is_bottom()) return base;
            AbsType sub = analyze(*node.subscript, env);
            Findings f;
            AbsType r = t_subscript(base, sub, f);
            report(f, expr.span);
            return r;
          } else if constexpr (std::is_same_v<T, IndexAssign>) {
            return analyze_index_assign(expr, node, env);
          } else {
            AbsType lhs = analyze(*node.lhs, env);
            if (lhs.is_bottom()) return lhs;
            AbsType rhs = analyze(*node.rhs, env);
            Findings f;
            AbsType r = t_binop(node.op, lhs, rhs, f, options_);
            report(f, node.op_span);
            return r;
          }
        },
        expr.node));
  }

  AbsType analyze_var(const Expr& expr, const std::string& name, const std::shared_ptr<AbsEnv>& env) {
    AbsType t;
    switch (env->lookup(name, &t)) {
      case AbsLookup::Found: return t;
      case AbsLookup::Missing: return report_one(missing_argument(name), expr.span);
      case AbsLookup::Unbound: break;
    }
    if (auto b = builtin_from_name(name)) return builtin_type(*b);
    return report_one(unbound_variable(name), expr.span);
  }

  static AbsType builtin_type(Builtin b) {
    auto c = std::make_shared<AbsClosure>();
    c->builtin = b;
    return AbsType::function(std::move(c));
  }

  AbsType analyze_call(const Expr& expr, const Call& call, const std::shared_ptr<AbsEnv>& env) {
    AbsType callee;
    bool rebound_builtin = false;
    if (const auto* v = call.callee->as<Var>()) {
      switch (env->lookup(v->name, &callee)) {
        case AbsLookup::Found:
          rebound_builtin = builtin_from_name(v->name).has_value();
          break;
        case AbsLookup::Missing: return report_one(missing_argument(v->name), call.callee->span);
        case AbsLookup::Unbound:
          if (auto b = builtin_from_name(v->name)) {
            callee = builtin_type(*b);
          } else {
            return report_one(Condition{Code::E_UNBOUND, "could not find function \"" + v->name + "\""},
                              call.callee->span);
          }
          break;
      }
    } else {
      callee = analyze(*call.callee, env);
      if (callee.is_bottom()) return callee;
    }

    std::vector<AbsType> args;
    for (const auto& a : call.args) {
      args.push_back(analyze(*a, env));
      if (args.back().is_bottom()) return args.back();
    }

    // Calls through a user binding of a builtin name are not modelled.
    if (rebound_builtin || callee.is_top()) return AbsType::top();
    if (!callee.is_closure()) return report_one(make_condition(Code::E_NOTFUN), expr.span);

    const AbsClosure& c = *callee.closure;
    if (c.builtin) return apply_builtin(expr, call, *c.builtin, args);

    if (args.size() > c.params.size()) {
      std::vector<std::string> extra;
      for (std::size_t i = c.params.size(); i < call.args.size(); ++i) extra.push_back(deparse(*call.args[i]));
      return report_one(unused_arguments(extra), expr.span);
    }
    if (depth_ >= options_.max_call_depth || calls_ >= options_.call_budget) return AbsType::top();
    ++calls_;
    ++depth_;
    auto frame = std::make_shared<AbsEnv>(c.env);
    for (std::size_t i = 0; i < c.params.size(); ++i) {
      if (i < args.size()) {
        frame->assign(c.params[i], args[i]);
      } else {
        frame->bind_missing(c.params[i]);
      }
    }
    AbsType result = AbsType::null();
    for (const auto& stmt : c.body) {
      result = analyze(*stmt, frame);
      if (result.is_bottom()) break;
    }
    --depth_;
    return result;
  }

  AbsType apply_builtin(const Expr& expr, const Call& call, Builtin b, const std::vector<AbsType>& args) {
    std::vector<std::string> params = builtin_params(b);
    if (!builtin_is_variadic(b)) {
      if (args.size() > params.size()) {
        std::vector<std::string> extra;
        for (std::size_t i = params.size(); i < call.args.size(); ++i) extra.push_back(deparse(*call.args[i]));
        return report_one(unused_arguments(extra), expr.span);
      }
      if (args.size() < params.size()) return report_one(missing_argument(params[args.size()]), expr.span);
    }
    Findings f;
    AbsType r;
    switch (b) {
      case Builtin::Combine: r = t_combine(args, f); break;
      case Builtin::Array: r = t_array(args[1], args[0], f); break;
      case Builtin::Matrix: r = t_matrix(args[1], args[0], f); break;
      case Builtin::Mode:
        if (args[0].is_closure()) {
          r = abstract_value(RValue{Vector{Mode::Character, {std::string("function")}}});
        } else if (args[0].is_null()) {
          r = abstract_value(RValue{Vector{Mode::Character, {std::string("NULL")}}});
        } else if (args[0].is_container() && args[0].mode && args[0].size.is_known()) {
          // A vector of unknown size might be NULL at runtime.
          r = abstract_value(RValue{Vector{Mode::Character, {std::string(mode_name(*args[0].mode))}}});
        } else {
          r = AbsType::vector(Mode::Character, AbsSize::known(1));
        }
        break;
      case Builtin::Length:
        if (args[0].size.is_known() && !args[0].is_top()) {
          r = abstract_value(RValue{Vector{Mode::Numeric, {static_cast<double>(args[0].size.value())}}});
        } else {
          r = AbsType::vector(Mode::Numeric, AbsSize::known(1));
        }
        break;
    }
    report(f, expr.span);
    return r;
  }

  AbsType analyze_index_assign(const Expr& expr, const IndexAssign& ia, const std::shared_ptr<AbsEnv>& env) {
    AbsType repl = analyze(*ia.replacement, env);
    if (repl.is_bottom()) return repl;
    AbsType base;
    switch (env->lookup(ia.base, &base)) {
      case AbsLookup::Found: break;
      case AbsLookup::Missing: return report_one(missing_argument(ia.base), ia.base_span);
      case AbsLookup::Unbound: return report_one(unbound_variable(ia.base), ia.base_span);
    }
    note(base);
    AbsType sub = analyze(*ia.subscript, env);
    if (sub.is_bottom()) return sub;
    Findings f;
    AbsType updated = note(t_subscript_assign(base, sub, repl, f, options_));
    report(f, expr.span);
    if (updated.is_bottom()) return updated;
    env->assign(ia.base, std::move(updated));
    return repl;
  }

  CheckOptions options_;
  std::shared_ptr<AbsEnv> global_;
  std::vector<std::weak_ptr<AbsEnv>> frames_;
  std::vector<Diagnostic> diagnostics_;
  bool precise_ = true;
  int depth_ = 0;
  std::size_t calls_ = 0;
};

}  // namespace

CheckReport check_program(const Program& program, const CheckOptions& options) {
  Checker checker(options);
  CheckReport report;
  for (const auto& stmt : program.exprs) {
    StatementCheck sc = checker.check_statement(*stmt);
    for (const auto& d : sc.diagnostics) {
      bool duplicate = std::any_of(report.diagnostics.begin(), report.diagnostics.end(), [&](const Diagnostic& e) {
        return e.code == d.code && e.span == d.span;
      });
      if (!duplicate) report.diagnostics.push_back(d);
    }
    report.statement_types.push_back(sc.type);
    report.statements.push_back(std::move(sc));
  }
  return report;
}

}  // namespace rvec
