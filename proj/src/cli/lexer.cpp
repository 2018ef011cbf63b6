#include "ga/cli/lexer.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace ga::cli {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

std::string describe(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0x20 && u < 0x7f) return std::string("'") + c + "'";
  static const char hex[] = "0123456789abcdef";
  return std::string("byte 0x") + hex[u >> 4] + hex[u & 0xf];
}

bool looks_like_blade(std::string_view ident) {
  if (ident.size() < 2 || ident[0] != 'e') return false;
  for (char c : ident.substr(1)) {
    if (!is_digit(c) && !(c >= 'A' && c <= 'C')) return false;
  }
  return true;
}

} // namespace

SyntaxError::SyntaxError(Errc code, const std::string &message, Span span)
    : Error(code, std::string(code == Errc::lexical ? "lexical error" : "parse error") +
                      " at " + std::to_string(span.begin) + ".." + std::to_string(span.end) +
                      ": " + message),
      span_(span) {}

std::string_view to_string(TokenKind kind) noexcept {
  switch (kind) {
  case TokenKind::number: return "number";
  case TokenKind::ident: return "identifier";
  case TokenKind::blade: return "basis blade";
  case TokenKind::op: return "operator";
  case TokenKind::lparen: return "'('";
  case TokenKind::rparen: return "')'";
  case TokenKind::comma: return "','";
  case TokenKind::assign: return "'='";
  case TokenKind::end: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = input.size();

  while (i < n) {
    const char c = input[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    const std::size_t start = i;

    if (is_digit(c)) {
      while (i < n && is_digit(input[i])) ++i;
      if (i + 1 < n && input[i] == '.' && is_digit(input[i + 1])) {
        ++i;
        while (i < n && is_digit(input[i])) ++i;
      }
      if (i < n && (input[i] == 'e' || input[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < n && (input[j] == '+' || input[j] == '-')) ++j;
        if (j < n && is_digit(input[j])) {
          i = j;
          while (i < n && is_digit(input[i])) ++i;
        }
      }
      // "2e", "1e+", "12abc", "1.5.2"
      if (i < n && (is_ident_char(input[i]) ||
                    (input[i] == '.' && i + 1 < n && is_digit(input[i + 1])))) {
        std::size_t j = i;
        while (j < n && (is_ident_char(input[j]) || input[j] == '.')) ++j;
        throw SyntaxError(Errc::lexical, "malformed number", {start, j});
      }
      Token t{TokenKind::number, std::string(input.substr(start, i - start)), {start, i}};
      const auto [ptr, ec] = std::from_chars(input.data() + start, input.data() + i, t.number);
      if (ec != std::errc() || !std::isfinite(t.number)) {
        throw SyntaxError(Errc::lexical, "number out of range", {start, i});
      }
      tokens.push_back(std::move(t));
      continue;
    }

    if (is_ident_start(c)) {
      while (i < n && is_ident_char(input[i])) ++i;
      const std::string_view word = input.substr(start, i - start);
      Token t{TokenKind::ident, std::string(word), {start, i}};
      if (looks_like_blade(word)) {
        const auto blade = parse_blade_name(word);
        if (!blade) {
          throw SyntaxError(Errc::lexical,
                            "non-canonical basis blade '" + std::string(word) +
                                "' (indices 1-9, A-C, strictly ascending)",
                            {start, i});
        }
        t.kind = TokenKind::blade;
        t.blade = *blade;
      }
      tokens.push_back(std::move(t));
      continue;
    }

    TokenKind kind;
    switch (c) {
    case '+': case '-': case '*': case '/': case '^': case '.': case '~':
      kind = TokenKind::op;
      break;
    case '(': kind = TokenKind::lparen; break;
    case ')': kind = TokenKind::rparen; break;
    case ',': kind = TokenKind::comma; break;
    case '=': kind = TokenKind::assign; break;
    default:
      throw SyntaxError(Errc::lexical, "unexpected character " + describe(c), {i, i + 1});
    }
    tokens.push_back(Token{kind, std::string(1, c), {i, i + 1}});
    ++i;
  }
  tokens.push_back(Token{TokenKind::end, "", {n, n}});
  return tokens;
}

} // namespace ga::cli
