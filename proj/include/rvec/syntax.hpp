#pragma once

// Lexer, parser and deparser for the supported R subset: literals, variables,
// calls, `function`, `<-`/`=` assignment, one-dimensional indexing,
// subscript-assignment and the arithmetic/logical/comparison operators.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rvec/source_span.hpp"

namespace rvec {

enum class TokenKind {
  Number,
  String,
  True,
  False,
  Na,
  Null,
  Identifier,
  Function,
  LeftAssign,  // <-
  Equals,      // =
  Plus,
  Minus,
  Star,
  Slash,
  And,
  Or,
  Greater,
  Less,
  GreaterEqual,
  LessEqual,
  EqualEqual,
  NotEqual,
  LeftParen,
  RightParen,
  LeftBracket,
  RightBracket,
  LeftBrace,
  RightBrace,
  Comma,
  Separator,  // newline or ';'
  EndOfInput,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;  // exact source slice
  SourceSpan span;
};

// Lex and parse failures. `expected` is empty for lex errors.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(SourceSpan span, std::string message, std::vector<std::string> expected = {});

  const SourceSpan& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }
  bool is_lex_error() const { return lex_error_; }
  void mark_lex_error() { lex_error_ = true; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
  bool lex_error_ = false;
};

enum class BinaryOp { Add, Sub, Mul, Div, And, Or, Gt, Lt, Ge, Le, Eq, Ne };

std::string_view binary_op_text(BinaryOp op);
bool is_arithmetic(BinaryOp op);
bool is_comparison(BinaryOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct NumLit {
  double value;
};
struct StrLit {
  std::string value;
};
struct LogicalLit {
  bool value;
};
struct NaLit {};
struct NullLit {};
struct Var {
  std::string name;
};
struct Call {
  ExprPtr callee;
  std::vector<ExprPtr> args;
};
struct FunctionDef {
  std::vector<std::string> params;
  std::vector<ExprPtr> body;
  bool braced = false;
};
struct Assign {
  std::string target;
  ExprPtr value;
  bool equals_form = false;  // written with `=` rather than `<-`
};
struct Index {
  ExprPtr base;
  ExprPtr subscript;  // `x[]` parses with a NullLit subscript
};
struct IndexAssign {
  std::string base;
  SourceSpan base_span;
  ExprPtr subscript;
  ExprPtr replacement;
  bool equals_form = false;
};
struct BinOp {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
  SourceSpan op_span;
  bool unary_minus = false;  // `-e` on a non-literal, stored as 0 - e
};

using ExprNode = std::variant<NumLit, StrLit, LogicalLit, NaLit, NullLit, Var, Call, FunctionDef,
                              Assign, Index, IndexAssign, BinOp>;

struct Expr {
  ExprNode node;
  SourceSpan span;
  // Number of enclosing parenthesis pairs written in the source.
  int parens = 0;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
};

template <typename T>
ExprPtr make_expr(T node, SourceSpan span) {
  return std::make_shared<const Expr>(Expr{ExprNode{std::move(node)}, span, 0});
}

struct Program {
  std::vector<ExprPtr> exprs;
  std::shared_ptr<const std::string> source;
};

std::vector<Token> tokenize(std::string_view source);
Program parse(const std::vector<Token>& tokens);
// tokenize + parse, keeping a copy of the source for later slicing.
Program parse_source(std::string source);

// R-style single-line rendering (`c(1, 2) + c(1, 2, 3)`), used for the call
// text in messages. Numbers use the shortest form that reads back exactly,
// so parse(tokenize(deparse(e))) is structurally equal to e.
std::string deparse(const Expr& expr);
// As deparse, minus any parentheses the user wrapped around the whole call.
std::string deparse_call(const Expr& expr);
std::string pretty_print(const Program& program);

// Equality ignoring spans and grouping parentheses.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Program& a, const Program& b);

// Indented tree dump, for tests and debugging.
std::string dump_tree(const Expr& expr);

}  // namespace rvec
