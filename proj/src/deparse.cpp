#include <cmath>

#include "rvec/number_format.hpp"
#include "rvec/syntax.hpp"

namespace rvec {

std::string_view binary_op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::And: return "&";
    case BinaryOp::Or: return "|";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
  }
  return "?";
}

bool is_arithmetic(BinaryOp op) {
  return op == BinaryOp::Add || op == BinaryOp::Sub || op == BinaryOp::Mul || op == BinaryOp::Div;
}

bool is_comparison(BinaryOp op) {
  return op == BinaryOp::Gt || op == BinaryOp::Lt || op == BinaryOp::Ge || op == BinaryOp::Le ||
         op == BinaryOp::Eq || op == BinaryOp::Ne;
}

namespace {

constexpr int kPrecAssign = 0;
constexpr int kPrecUnary = 6;
constexpr int kPrecPostfix = 7;
constexpr int kPrecAtom = 8;

int op_precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return 1;
    case BinaryOp::And: return 2;
    case BinaryOp::Add:
    case BinaryOp::Sub: return 4;
    case BinaryOp::Mul:
    case BinaryOp::Div: return 5;
    default: return 3;
  }
}

int precedence(const Expr& e) {
  if (e.parens > 0) return kPrecAtom;
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumLit>) {
          return n.value < 0 || std::signbit(n.value) ? kPrecUnary : kPrecAtom;
        } else if constexpr (std::is_same_v<T, BinOp>) {
          return n.unary_minus ? kPrecUnary : op_precedence(n.op);
        } else if constexpr (std::is_same_v<T, Call> || std::is_same_v<T, Index>) {
          return kPrecPostfix;
        } else if constexpr (std::is_same_v<T, Assign> || std::is_same_v<T, IndexAssign> ||
                             std::is_same_v<T, FunctionDef>) {
          return kPrecAssign;
        } else {
          return kPrecAtom;
        }
      },
      e.node);
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string render(const Expr& e);

std::string render_at(const Expr& e, int min_prec) {
  std::string s = render(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

// Inside `(...)` or `[...]` only an `=` assignment needs parentheses; the
// delimiters already bound function bodies and `<-`.
std::string render_delimited(const Expr& e) {
  if (e.parens > 0) return render(e);
  if (const auto* a = e.as<Assign>(); a && a->equals_form) return "(" + render(e) + ")";
  if (const auto* a = e.as<IndexAssign>(); a && a->equals_form) return "(" + render(e) + ")";
  return render(e);
}

std::string render_args(const std::vector<ExprPtr>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    out += render_delimited(*args[i]);
  }
  return out;
}

std::string render_node(const Expr& e);

std::string render(const Expr& e) {
  std::string s = render_node(e);
  for (int i = 0; i < e.parens; ++i) s = "(" + s + ")";
  return s;
}

std::string render_node(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumLit>) {
          return format_number_exact(n.value);
        } else if constexpr (std::is_same_v<T, StrLit>) {
          return quote(n.value);
        } else if constexpr (std::is_same_v<T, LogicalLit>) {
          return n.value ? "TRUE" : "FALSE";
        } else if constexpr (std::is_same_v<T, NaLit>) {
          return "NA";
        } else if constexpr (std::is_same_v<T, NullLit>) {
          return "NULL";
        } else if constexpr (std::is_same_v<T, Var>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, Call>) {
          return render_at(*n.callee, kPrecPostfix) + "(" + render_args(n.args) + ")";
        } else if constexpr (std::is_same_v<T, FunctionDef>) {
          std::string out = "function(";
          for (std::size_t i = 0; i < n.params.size(); ++i) {
            if (i > 0) out += ", ";
            out += n.params[i];
          }
          out += ") ";
          if (n.braced || n.body.size() != 1) {
            out += "{";
            for (std::size_t i = 0; i < n.body.size(); ++i) {
              out += i == 0 ? " " : "; ";
              out += render(*n.body[i]);
            }
            out += " }";
          } else {
            out += render(*n.body.front());
          }
          return out;
        } else if constexpr (std::is_same_v<T, Assign>) {
          return n.target + (n.equals_form ? " = " : " <- ") + render(*n.value);
        } else if constexpr (std::is_same_v<T, Index>) {
          std::string sub = render_delimited(*n.subscript);
          return render_at(*n.base, kPrecPostfix) + "[" + sub + "]";
        } else if constexpr (std::is_same_v<T, IndexAssign>) {
          return n.base + "[" + render_delimited(*n.subscript) + "]" + (n.equals_form ? " = " : " <- ") +
                 render(*n.replacement);
        } else {
          static_assert(std::is_same_v<T, BinOp>);
          if (n.unary_minus) return "-" + render_at(*n.rhs, kPrecUnary);
          int p = op_precedence(n.op);
          return render_at(*n.lhs, p) + " " + std::string(binary_op_text(n.op)) + " " +
                 render_at(*n.rhs, p + 1);
        }
      },
      e.node);
}

bool same_list(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!structurally_equal(*a[i], *b[i])) return false;
  }
  return true;
}

}  // namespace

std::string deparse(const Expr& expr) { return render(expr); }

std::string deparse_call(const Expr& expr) { return render_node(expr); }

std::string pretty_print(const Program& program) {
  std::string out;
  for (const auto& e : program.exprs) {
    out += render(*e);
    out += '\n';
  }
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&b](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, NumLit>) {
          return x.value == y.value && std::signbit(x.value) == std::signbit(y.value);
        } else if constexpr (std::is_same_v<T, StrLit> || std::is_same_v<T, LogicalLit>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, NaLit> || std::is_same_v<T, NullLit>) {
          return true;
        } else if constexpr (std::is_same_v<T, Var>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Call>) {
          return structurally_equal(*x.callee, *y.callee) && same_list(x.args, y.args);
        } else if constexpr (std::is_same_v<T, FunctionDef>) {
          return x.params == y.params && same_list(x.body, y.body);
        } else if constexpr (std::is_same_v<T, Assign>) {
          return x.target == y.target && x.equals_form == y.equals_form &&
                 structurally_equal(*x.value, *y.value);
        } else if constexpr (std::is_same_v<T, Index>) {
          return structurally_equal(*x.base, *y.base) && structurally_equal(*x.subscript, *y.subscript);
        } else if constexpr (std::is_same_v<T, IndexAssign>) {
          return x.base == y.base && x.equals_form == y.equals_form &&
                 structurally_equal(*x.subscript, *y.subscript) &&
                 structurally_equal(*x.replacement, *y.replacement);
        } else {
          return x.op == y.op && x.unary_minus == y.unary_minus && structurally_equal(*x.lhs, *y.lhs) &&
                 structurally_equal(*x.rhs, *y.rhs);
        }
      },
      a.node);
}

bool structurally_equal(const Program& a, const Program& b) { return same_list(a.exprs, b.exprs); }

std::string dump_tree(const Expr& expr) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        auto list = [](const std::vector<ExprPtr>& xs) {
          std::string out;
          for (const auto& x : xs) out += " " + dump_tree(*x);
          return out;
        };
        if constexpr (std::is_same_v<T, NumLit>) {
          return format_number_exact(n.value);
        } else if constexpr (std::is_same_v<T, StrLit>) {
          return quote(n.value);
        } else if constexpr (std::is_same_v<T, LogicalLit>) {
          return n.value ? "TRUE" : "FALSE";
        } else if constexpr (std::is_same_v<T, NaLit>) {
          return "NA";
        } else if constexpr (std::is_same_v<T, NullLit>) {
          return "NULL";
        } else if constexpr (std::is_same_v<T, Var>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, Call>) {
          return "(Call " + dump_tree(*n.callee) + list(n.args) + ")";
        } else if constexpr (std::is_same_v<T, FunctionDef>) {
          std::string params;
          for (const auto& p : n.params) params += (params.empty() ? "" : " ") + p;
          return "(FunctionDef (" + params + ")" + list(n.body) + ")";
        } else if constexpr (std::is_same_v<T, Assign>) {
          return "(Assign " + n.target + " " + dump_tree(*n.value) + ")";
        } else if constexpr (std::is_same_v<T, Index>) {
          return "(Index " + dump_tree(*n.base) + " " + dump_tree(*n.subscript) + ")";
        } else if constexpr (std::is_same_v<T, IndexAssign>) {
          return "(IndexAssign " + n.base + " " + dump_tree(*n.subscript) + " " + dump_tree(*n.replacement) +
                 ")";
        } else {
          if (n.unary_minus) return "(Neg " + dump_tree(*n.rhs) + ")";
          return "(" + std::string(binary_op_text(n.op)) + " " + dump_tree(*n.lhs) + " " + dump_tree(*n.rhs) +
                 ")";
        }
      },
      expr.node);
}

}  // namespace rvec
