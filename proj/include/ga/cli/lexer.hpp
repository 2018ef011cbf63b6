#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ga/error.hpp"
#include "ga/signature.hpp"

namespace ga::cli {

// Half-open byte range [begin, end) into the statement text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span &, const Span &) = default;
};

enum class TokenKind { number, ident, blade, op, lparen, rparen, comma, assign, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string lexeme;
  Span span;
  double number = 0.0; // number tokens
  Blade blade{};       // blade tokens

  bool is_op(char c) const { return kind == TokenKind::op && lexeme.size() == 1 && lexeme[0] == c; }
};

// Lexical and parse errors carry the offending span.
class SyntaxError : public Error {
public:
  SyntaxError(Errc code, const std::string &message, Span span);
  Span span() const noexcept { return span_; }

private:
  Span span_;
};

// Splits a statement into tokens, always terminated by an end token.
// Identifiers of the form e<symbols> with symbols in [0-9A-C] are basis
// blades and must name strictly ascending indices 1..12 (e12, never e21).
std::vector<Token> tokenize(std::string_view input);

std::string_view to_string(TokenKind kind) noexcept;

} // namespace ga::cli
