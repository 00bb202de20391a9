#include <cctype>

#include "rvec/syntax.hpp"

namespace rvec {

SyntaxError::SyntaxError(SourceSpan span, std::string message, std::vector<std::string> expected)
    : std::runtime_error(std::move(message)), span_(span), expected_(std::move(expected)) {}

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Number: return "number";
    case TokenKind::String: return "string";
    case TokenKind::True: return "TRUE";
    case TokenKind::False: return "FALSE";
    case TokenKind::Na: return "NA";
    case TokenKind::Null: return "NULL";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Function: return "function";
    case TokenKind::LeftAssign: return "<-";
    case TokenKind::Equals: return "=";
    case TokenKind::Plus: return "+";
    case TokenKind::Minus: return "-";
    case TokenKind::Star: return "*";
    case TokenKind::Slash: return "/";
    case TokenKind::And: return "&";
    case TokenKind::Or: return "|";
    case TokenKind::Greater: return ">";
    case TokenKind::Less: return "<";
    case TokenKind::GreaterEqual: return ">=";
    case TokenKind::LessEqual: return "<=";
    case TokenKind::EqualEqual: return "==";
    case TokenKind::NotEqual: return "!=";
    case TokenKind::LeftParen: return "(";
    case TokenKind::RightParen: return ")";
    case TokenKind::LeftBracket: return "[";
    case TokenKind::RightBracket: return "]";
    case TokenKind::LeftBrace: return "{";
    case TokenKind::RightBrace: return "}";
    case TokenKind::Comma: return ",";
    case TokenKind::Separator: return "separator";
    case TokenKind::EndOfInput: return "end of input";
  }
  return "?";
}

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '.' || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '.' || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blanks_and_comments();
      if (at_end()) {
        Mark m = mark();
        out.push_back(Token{TokenKind::EndOfInput, "", span_from(m)});
        return out;
      }
      out.push_back(next_token());
    }
  }

 private:
  struct Mark {
    std::size_t pos;
    int line;
    int col;
  };

  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  Mark mark() const { return Mark{pos_, line_, col_}; }

  void advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
      last_col_ = 0;
      return;
    }
    // UTF-8 continuation bytes do not start a new column.
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      last_col_ = col_;
      ++col_;
    }
  }

  // Span from `m` through the last consumed character.
  SourceSpan span_from(const Mark& m) const {
    SourceSpan s;
    s.start_line = m.line;
    s.start_col = m.col;
    s.begin = m.pos;
    s.end = pos_;
    if (pos_ == m.pos) {
      s.end_line = m.line;
      s.end_col = m.col;
    } else if (src_[pos_ - 1] == '\n') {
      s.end_line = line_ - 1;
      s.end_col = newline_col_;
    } else {
      s.end_line = line_;
      s.end_col = last_col_;
    }
    return s;
  }

  [[noreturn]] void fail(const Mark& m, const std::string& message) {
    SyntaxError err(span_from(m), message);
    err.mark_lex_error();
    throw err;
  }

  void skip_blanks_and_comments() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token make(TokenKind kind, const Mark& m) {
    return Token{kind, std::string(src_.substr(m.pos, pos_ - m.pos)), span_from(m)};
  }

  Token next_token() {
    Mark m = mark();
    char c = peek();

    if (c == '\n') {
      newline_col_ = col_;
      advance();
      return make(TokenKind::Separator, m);
    }
    if (c == ';') {
      advance();
      return make(TokenKind::Separator, m);
    }
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) return number(m);
    if (c == '"' || c == '\'') return string(m);
    if (is_ident_start(c)) return word(m);

    auto single = [&](TokenKind kind) {
      advance();
      return make(kind, m);
    };
    auto pair = [&](TokenKind kind) {
      advance();
      advance();
      return make(kind, m);
    };

    switch (c) {
      case '<':
        if (peek(1) == '-') return pair(TokenKind::LeftAssign);
        if (peek(1) == '=') return pair(TokenKind::LessEqual);
        return single(TokenKind::Less);
      case '>':
        if (peek(1) == '=') return pair(TokenKind::GreaterEqual);
        return single(TokenKind::Greater);
      case '=':
        if (peek(1) == '=') return pair(TokenKind::EqualEqual);
        return single(TokenKind::Equals);
      case '!':
        if (peek(1) == '=') return pair(TokenKind::NotEqual);
        break;
      case '+': return single(TokenKind::Plus);
      case '-': return single(TokenKind::Minus);
      case '*': return single(TokenKind::Star);
      case '/': return single(TokenKind::Slash);
      case '&': return single(TokenKind::And);
      case '|': return single(TokenKind::Or);
      case '(': return single(TokenKind::LeftParen);
      case ')': return single(TokenKind::RightParen);
      case '[': return single(TokenKind::LeftBracket);
      case ']': return single(TokenKind::RightBracket);
      case '{': return single(TokenKind::LeftBrace);
      case '}': return single(TokenKind::RightBrace);
      case ',': return single(TokenKind::Comma);
      default:
        break;
    }
    advance();
    // Swallow the rest of a multi-byte character so the span covers it.
    while (!at_end() && (static_cast<unsigned char>(peek()) & 0xC0) == 0x80) advance();
    fail(m, "unexpected character '" + std::string(src_.substr(m.pos, pos_ - m.pos)) + "'");
  }

  Token number(const Mark& m) {
    while (is_digit(peek())) advance();
    if (peek() == '.') {
      advance();
      while (is_digit(peek())) advance();
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t ahead = 1;
      if (peek(1) == '+' || peek(1) == '-') ahead = 2;
      if (is_digit(peek(ahead))) {
        for (std::size_t i = 0; i < ahead; ++i) advance();
        while (is_digit(peek())) advance();
      }
    }
    if (is_ident_char(peek())) {
      while (is_ident_char(peek())) advance();
      fail(m, "malformed number '" + std::string(src_.substr(m.pos, pos_ - m.pos)) + "'");
    }
    return make(TokenKind::Number, m);
  }

  Token string(const Mark& m) {
    char quote = peek();
    advance();
    while (true) {
      if (at_end()) fail(m, "unterminated string literal");
      char c = peek();
      if (c == quote) {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (at_end()) fail(m, "unterminated string literal");
        char e = peek();
        if (e != '"' && e != '\'' && e != '\\' && e != 'n' && e != 't') {
          advance();
          fail(m, std::string("unsupported escape sequence '\\") + e + "'");
        }
      }
      advance();
    }
    return make(TokenKind::String, m);
  }

  Token word(const Mark& m) {
    while (is_ident_char(peek())) advance();
    std::string_view text = src_.substr(m.pos, pos_ - m.pos);
    TokenKind kind = TokenKind::Identifier;
    if (text == "TRUE") kind = TokenKind::True;
    else if (text == "FALSE") kind = TokenKind::False;
    else if (text == "NA") kind = TokenKind::Na;
    else if (text == "NULL") kind = TokenKind::Null;
    else if (text == "function") kind = TokenKind::Function;
    return make(kind, m);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int last_col_ = 0;
  int newline_col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace rvec
