#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ga/cli/lexer.hpp"

namespace ga::cli {

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Literal {
  double value;
};
struct BladeRef {
  Blade blade;
};
struct Variable {
  std::string name;
};
struct Negate {
  NodePtr operand;
};
struct Reverse {
  NodePtr operand;
};
struct Binary {
  char op; // + - * / ^ .
  NodePtr lhs;
  NodePtr rhs;
};
struct Call {
  std::string name;
  std::vector<NodePtr> args;
};
struct Let {
  std::string name;
  NodePtr value;
};

struct Node {
  std::variant<Literal, BladeRef, Variable, Negate, Reverse, Binary, Call, Let> value;
  Span span;
};

struct FunctionInfo {
  std::string_view name;
  int arity;
  std::string_view usage;
};

// The fixed set of callable functions and their argument counts.
std::span<const FunctionInfo> function_registry();
const FunctionInfo *find_function(std::string_view name);

// Precedence, tightest first: postfix ~ and calls; unary -; ^ and . (one
// tier, left-assoc); * and / (left-assoc); + and -.
NodePtr parse_expression(const std::vector<Token> &tokens);

// A REPL or script line: `let name = expr`, `assert lhs ~ rhs [tol]`, or a
// bare expression.
struct Statement {
  enum class Kind { expression, let, assert_close } kind = Kind::expression;
  NodePtr expr;        // expression or let binding
  NodePtr lhs, rhs;    // assert
  std::optional<double> tolerance;
};

Statement parse_statement(std::string_view text);

// Convenience: tokenize + parse_expression.
NodePtr parse(std::string_view text);

// Fully parenthesized prefix rendering used to compare tree shapes,
// e.g. "(+ (. a b) (^ a b))".
std::string to_sexpr(const Node &node);

} // namespace ga::cli
