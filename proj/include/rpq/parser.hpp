#pragma once

// Concrete RPQ syntax.
//
//   expr    := term ('+' term)*             union (binary '+')
//   term    := factor+                      juxtaposition is concatenation
//   factor  := primary ('?' | '*' | '+' | '{' n '}' | '{' ',' n '}')*
//   primary := SYMBOL | '(' expr ')'
//
// A run of letters is split into single-character symbols ("abc" is a.b.c);
// a letter keeps trailing digits ("a1" is one symbol), and a quoted token
// ('knows') is one symbol of any shape. A '+' is postfix iff the next token
// cannot start an expression. Negation and any other construct is reported
// as unsupported.

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpq/ast.hpp"

namespace rpq {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos, bool unsupported = false)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos),
        unsupported_construct(unsupported) {}
  size_t position;
  bool unsupported_construct;
};

namespace detail {

struct Token {
  enum Kind { Symbol, LParen, RParen, Union, Quest, Star, PlusTok, LBrace, RBrace, Comma, Number, End } kind;
  std::string text;
  size_t pos;
};

inline std::vector<Token> lex(const std::string& in) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < in.size()) {
    char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '(': out.push_back({Token::LParen, "(", i++}); continue;
      case ')': out.push_back({Token::RParen, ")", i++}); continue;
      case '+': out.push_back({Token::Union, "+", i++}); continue;
      case '?': out.push_back({Token::Quest, "?", i++}); continue;
      case '*': out.push_back({Token::Star, "*", i++}); continue;
      case '{': out.push_back({Token::LBrace, "{", i++}); continue;
      case '}': out.push_back({Token::RBrace, "}", i++}); continue;
      case ',': out.push_back({Token::Comma, ",", i++}); continue;
      case '!':
        throw ParseError("negation '!' is not supported", i, true);
      case '^':
        throw ParseError("inverse '^' is not supported", i, true);
      case '\'': {
        size_t end = in.find('\'', i + 1);
        if (end == std::string::npos) throw ParseError("unterminated quote", i);
        if (end == i + 1) throw ParseError("empty quoted symbol", i);
        out.push_back({Token::Symbol, in.substr(i + 1, end - i - 1), i});
        i = end + 1;
        continue;
      }
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) ++j;
      out.push_back({Token::Number, in.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      // A letter plus any trailing digits is one symbol ("a1"); runs of
      // letters split into single-character symbols ("abc" = a.b.c).
      size_t j = i + 1;
      while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) ++j;
      out.push_back({Token::Symbol, in.substr(i, j - i), i});
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Token::End, "", in.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  AstPtr parse() {
    AstPtr e = parse_expr();
    if (peek().kind != Token::End) throw ParseError("trailing input", peek().pos);
    return e;
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  static bool starts_expr(const Token& t) {
    return t.kind == Token::Symbol || t.kind == Token::LParen;
  }

  AstPtr parse_expr() {
    AstPtr e = parse_term();
    while (peek().kind == Token::Union && starts_expr(peek(1))) {
      take();
      e = ast::alt(std::move(e), parse_term());
    }
    return e;
  }

  AstPtr parse_term() {
    AstPtr e = parse_factor();
    while (starts_expr(peek())) e = ast::concat(std::move(e), parse_factor());
    return e;
  }

  AstPtr parse_factor() {
    AstPtr e = parse_primary();
    while (true) {
      const Token& t = peek();
      if (t.kind == Token::Quest) {
        take();
        e = ast::opt(std::move(e));
      } else if (t.kind == Token::Star) {
        take();
        e = ast::star(std::move(e));
      } else if (t.kind == Token::Union && !starts_expr(peek(1))) {
        take();
        e = ast::plus(std::move(e));
      } else if (t.kind == Token::LBrace) {
        take();
        bool up_to = false;
        if (peek().kind == Token::Comma) {
          take();
          up_to = true;
        }
        if (peek().kind != Token::Number)
          throw ParseError("expected count in {...}", peek().pos);
        uint64_t n = std::stoull(take().text);
        if (n > 1000) throw ParseError("repetition count too large", t.pos);
        if (peek().kind != Token::RBrace) throw ParseError("expected '}'", peek().pos);
        take();
        e = up_to ? ast::up_to(e, static_cast<uint32_t>(n))
                  : ast::repeat(e, static_cast<uint32_t>(n));
      } else {
        break;
      }
    }
    return e;
  }

  AstPtr parse_primary() {
    const Token& t = peek();
    if (t.kind == Token::Symbol) {
      take();
      return ast::atom(t.text);
    }
    if (t.kind == Token::LParen) {
      take();
      AstPtr e = parse_expr();
      if (peek().kind != Token::RParen) throw ParseError("expected ')'", peek().pos);
      take();
      return e;
    }
    throw ParseError("expected symbol or '('", t.pos);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace detail

inline AstPtr parse(const std::string& text) { return detail::Parser(text).parse(); }

}  // namespace rpq
