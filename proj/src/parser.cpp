#include <charconv>
#include <set>

#include "rvec/syntax.hpp"

namespace rvec {

namespace {

const std::set<std::string, std::less<>> kUnsupportedKeywords = {
    "if", "else", "for", "while", "repeat", "break", "next", "in"};

struct Context {
  bool skip_newlines;
  bool allow_equals;
};

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
    contexts_.push_back(Context{false, true});
  }

  Program program() {
    Program p;
    skip_separators();
    while (peek().kind != TokenKind::EndOfInput) {
      p.exprs.push_back(expression());
      end_of_statement(TokenKind::EndOfInput);
    }
    return p;
  }

 private:
  // ---- token access -------------------------------------------------------

  const Token& raw(std::size_t i) const { return toks_[std::min(i, toks_.size() - 1)]; }

  bool is_newline(const Token& t) const { return t.kind == TokenKind::Separator && t.text == "\n"; }

  void skip_insignificant() {
    if (contexts_.back().skip_newlines) {
      while (is_newline(raw(pos_))) ++pos_;
    }
  }

  const Token& peek() {
    skip_insignificant();
    return raw(pos_);
  }

  const Token& consume() {
    skip_insignificant();
    const Token& t = raw(pos_);
    if (t.kind != TokenKind::EndOfInput) ++pos_;
    return t;
  }

  bool check(TokenKind kind) { return peek().kind == kind; }

  bool accept(TokenKind kind) {
    if (!check(kind)) return false;
    consume();
    return true;
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (!check(kind)) {
      fail_expected(std::string(what), {std::string(token_kind_name(kind))});
    }
    return consume();
  }

  void skip_newlines() {
    while (is_newline(raw(pos_))) ++pos_;
  }

  void skip_separators() {
    while (raw(pos_).kind == TokenKind::Separator) ++pos_;
  }

  [[noreturn]] void fail_expected(const std::string& context, std::vector<std::string> expected) {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::EndOfInput ? "end of input"
                        : t.kind == TokenKind::Separator ? (t.text == ";" ? "';'" : "newline")
                                                         : "'" + t.text + "'";
    std::string msg = "unexpected " + found;
    if (!context.empty()) msg += " " + context;
    if (!expected.empty()) {
      msg += "; expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += "'" + expected[i] + "'";
      }
    }
    throw SyntaxError(t.span, msg, std::move(expected));
  }

  [[noreturn]] void fail_at(const SourceSpan& span, const std::string& msg) { throw SyntaxError(span, msg); }

  struct ContextGuard {
    Parser& p;
    ContextGuard(Parser& parser, Context c) : p(parser) { p.contexts_.push_back(c); }
    ~ContextGuard() { p.contexts_.pop_back(); }
  };

  void end_of_statement(TokenKind closer) {
    const Token& t = raw(pos_);
    if (t.kind == TokenKind::Separator) {
      skip_separators();
      return;
    }
    if (t.kind == closer) return;
    fail_expected("after expression", {"newline", ";"});
  }

  // ---- grammar ------------------------------------------------------------

  ExprPtr expression() {
    ExprPtr lhs = binary(0);
    const Token& t = peek();
    if (t.kind != TokenKind::LeftAssign && t.kind != TokenKind::Equals) return lhs;
    bool equals = t.kind == TokenKind::Equals;
    if (equals && !contexts_.back().allow_equals) {
      fail_at(t.span, "named arguments are not supported");
    }
    consume();
    skip_newlines();
    ExprPtr rhs = expression();
    SourceSpan span = merge(lhs->span, rhs->span);
    if (const auto* v = lhs->as<Var>()) {
      return make_expr(Assign{v->name, rhs, equals}, span);
    }
    if (const auto* idx = lhs->as<Index>()) {
      if (const auto* base = idx->base->as<Var>()) {
        return make_expr(IndexAssign{base->name, idx->base->span, idx->subscript, rhs, equals}, span);
      }
    }
    fail_at(lhs->span, "invalid assignment target; only a variable or variable[subscript] can be assigned");
  }

  static int precedence(TokenKind kind) {
    switch (kind) {
      case TokenKind::Or: return 1;
      case TokenKind::And: return 2;
      case TokenKind::Greater:
      case TokenKind::Less:
      case TokenKind::GreaterEqual:
      case TokenKind::LessEqual:
      case TokenKind::EqualEqual:
      case TokenKind::NotEqual: return 3;
      case TokenKind::Plus:
      case TokenKind::Minus: return 4;
      case TokenKind::Star:
      case TokenKind::Slash: return 5;
      default: return -1;
    }
  }

  static BinaryOp to_op(TokenKind kind) {
    switch (kind) {
      case TokenKind::Plus: return BinaryOp::Add;
      case TokenKind::Minus: return BinaryOp::Sub;
      case TokenKind::Star: return BinaryOp::Mul;
      case TokenKind::Slash: return BinaryOp::Div;
      case TokenKind::And: return BinaryOp::And;
      case TokenKind::Or: return BinaryOp::Or;
      case TokenKind::Greater: return BinaryOp::Gt;
      case TokenKind::Less: return BinaryOp::Lt;
      case TokenKind::GreaterEqual: return BinaryOp::Ge;
      case TokenKind::LessEqual: return BinaryOp::Le;
      case TokenKind::EqualEqual: return BinaryOp::Eq;
      default: return BinaryOp::Ne;
    }
  }

  // Precedence climbing; all binary levels are left-associative.
  ExprPtr binary(int min_prec) {
    ExprPtr lhs = unary();
    while (true) {
      const Token& t = peek();
      int prec = precedence(t.kind);
      if (prec < 0 || prec < min_prec) break;
      BinaryOp op = to_op(t.kind);
      SourceSpan op_span = t.span;
      consume();
      skip_newlines();
      ExprPtr rhs = binary(prec + 1);
      lhs = make_expr(BinOp{op, lhs, rhs, op_span, false}, merge(lhs->span, rhs->span));
    }
    return lhs;
  }

  ExprPtr unary() {
    if (check(TokenKind::Minus)) {
      SourceSpan minus = consume().span;
      skip_newlines();
      ExprPtr operand = unary();
      SourceSpan span = merge(minus, operand->span);
      if (const auto* lit = operand->as<NumLit>()) {
        return make_expr(NumLit{-lit->value}, span);
      }
      ExprPtr zero = make_expr(NumLit{0.0}, minus);
      return make_expr(BinOp{BinaryOp::Sub, zero, operand, minus, true}, span);
    }
    if (check(TokenKind::Plus)) {
      fail_at(peek().span, "unary '+' is not in the supported subset");
    }
    return postfix();
  }

  ExprPtr postfix() {
    ExprPtr e = primary();
    while (true) {
      // A newline ends the expression unless we are inside parentheses.
      const Token& t = peek();
      if (t.kind == TokenKind::LeftParen) {
        consume();
        std::vector<ExprPtr> args;
        {
          ContextGuard g(*this, Context{true, false});
          if (!check(TokenKind::RightParen)) {
            while (true) {
              if (check(TokenKind::Comma) || check(TokenKind::RightParen)) {
                fail_at(peek().span, "empty arguments are not supported");
              }
              args.push_back(expression());
              if (accept(TokenKind::Comma)) continue;
              if (check(TokenKind::RightParen)) break;
              fail_expected("in argument list", {",", ")"});
            }
          }
        }
        ContextGuard g(*this, Context{true, false});
        const Token& close = expect(TokenKind::RightParen, "in argument list");
        e = make_expr(Call{e, std::move(args)}, merge(e->span, close.span));
      } else if (t.kind == TokenKind::LeftBracket) {
        consume();
        ExprPtr sub;
        {
          ContextGuard g(*this, Context{true, false});
          if (check(TokenKind::RightBracket)) {
            sub = make_expr(NullLit{}, peek().span);
          } else {
            sub = expression();
            if (check(TokenKind::Comma)) {
              fail_at(peek().span, "multi-dimensional indexing is not in the supported subset");
            }
          }
        }
        ContextGuard g(*this, Context{true, false});
        const Token& close = expect(TokenKind::RightBracket, "in subscript");
        e = make_expr(Index{e, sub}, merge(e->span, close.span));
      } else {
        break;
      }
    }
    return e;
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number: {
        const Token& tok = consume();
        double value = 0;
        const char* first = tok.text.data();
        const char* last = first + tok.text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) fail_at(tok.span, "malformed number '" + tok.text + "'");
        return make_expr(NumLit{value}, tok.span);
      }
      case TokenKind::String: {
        const Token& tok = consume();
        return make_expr(StrLit{unescape(tok.text)}, tok.span);
      }
      case TokenKind::True: return make_expr(LogicalLit{true}, consume().span);
      case TokenKind::False: return make_expr(LogicalLit{false}, consume().span);
      case TokenKind::Na: return make_expr(NaLit{}, consume().span);
      case TokenKind::Null: return make_expr(NullLit{}, consume().span);
      case TokenKind::Identifier: {
        if (kUnsupportedKeywords.contains(t.text)) {
          fail_at(t.span, "construct '" + t.text + "' is not in the supported subset");
        }
        const Token& tok = consume();
        return make_expr(Var{tok.text}, tok.span);
      }
      case TokenKind::Function: return function();
      case TokenKind::LeftParen: {
        consume();
        ExprPtr inner;
        {
          ContextGuard g(*this, Context{true, true});
          if (check(TokenKind::RightParen)) fail_expected("in parentheses", {"expression"});
          inner = expression();
        }
        ContextGuard g(*this, Context{true, true});
        expect(TokenKind::RightParen, "in parentheses");
        Expr grouped = *inner;
        ++grouped.parens;
        return std::make_shared<const Expr>(std::move(grouped));
      }
      case TokenKind::LeftBrace:
        fail_at(t.span, "braced blocks are only supported as function bodies");
      default:
        fail_expected("", {"expression"});
    }
  }

  ExprPtr function() {
    SourceSpan start = consume().span;
    std::vector<std::string> params;
    {
      ContextGuard g(*this, Context{true, false});
      expect(TokenKind::LeftParen, "after 'function'");
      if (!check(TokenKind::RightParen)) {
        while (true) {
          const Token& p = peek();
          if (p.kind != TokenKind::Identifier) fail_expected("in parameter list", {"identifier"});
          for (const auto& existing : params) {
            if (existing == p.text) fail_at(p.span, "repeated formal argument '" + p.text + "'");
          }
          params.push_back(p.text);
          consume();
          if (check(TokenKind::Equals)) fail_at(peek().span, "default arguments are not supported");
          if (accept(TokenKind::Comma)) continue;
          if (check(TokenKind::RightParen)) break;
          fail_expected("in parameter list", {",", ")"});
        }
      }
      expect(TokenKind::RightParen, "in parameter list");
    }
    skip_newlines();
    std::vector<ExprPtr> body;
    SourceSpan end;
    bool braced = false;
    if (check(TokenKind::LeftBrace)) {
      braced = true;
      consume();
      ContextGuard g(*this, Context{false, true});
      skip_separators();
      while (!check(TokenKind::RightBrace)) {
        if (check(TokenKind::EndOfInput)) fail_expected("in function body", {"}"});
        body.push_back(expression());
        end_of_statement(TokenKind::RightBrace);
      }
      if (body.empty()) fail_at(peek().span, "empty function bodies are not supported");
      end = consume().span;
    } else {
      body.push_back(expression());
      end = body.back()->span;
    }
    return make_expr(FunctionDef{std::move(params), std::move(body), braced}, merge(start, end));
  }

  static std::string unescape(const std::string& text) {
    std::string out;
    for (std::size_t i = 1; i + 1 < text.size(); ++i) {
      char c = text[i];
      if (c == '\\' && i + 2 < text.size()) {
        char e = text[++i];
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          default: out += e; break;
        }
      } else {
        out += c;
      }
    }
    return out;
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  std::vector<Context> contexts_;
};

}  // namespace

Program parse(const std::vector<Token>& tokens) {
  if (tokens.empty()) return Program{};
  return Parser(tokens).program();
}

Program parse_source(std::string source) {
  auto text = std::make_shared<const std::string>(std::move(source));
  Program p = parse(tokenize(*text));
  p.source = std::move(text);
  return p;
}

}  // namespace rvec
