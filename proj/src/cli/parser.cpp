#include "ga/cli/parser.hpp"

#include <array>
#include <charconv>

namespace ga::cli {

namespace {

constexpr std::array registry{
    FunctionInfo{"exp", 1, "exp(B): exponential of a 2-blade"},
    FunctionInfo{"rev", 1, "rev(A): reverse"},
    FunctionInfo{"inv", 1, "inv(A): inverse of a scalar, vector or versor"},
    FunctionInfo{"grade", 2, "grade(A, k): grade-k part"},
    FunctionInfo{"norm", 1, "norm(A): sqrt(|<A A~>|)"},
    FunctionInfo{"dual", 1, "dual(A): I A in G(3,0)"},
    FunctionInfo{"cross", 2, "cross(a, b): cross product in G(3,0)"},
    FunctionInfo{"proj", 2, "proj(x, a): component of x along a"},
    FunctionInfo{"rej", 2, "rej(x, a): component of x perpendicular to a"},
    FunctionInfo{"reflect", 2, "reflect(x, B): B x B for a unit 2-blade B"},
    FunctionInfo{"reflectn", 2, "reflectn(x, n): -n x n in G(3,0)"},
    FunctionInfo{"rot", 2, "rot(x, R): R x R~"},
    FunctionInfo{"rotor", 2, "rotor(a, b): rotor taking unit a to unit b"},
    FunctionInfo{"rotor2", 2, "rotor2(n1, n2): n2 n1, reflection in n1 then n2"},
    FunctionInfo{"stereo", 1, "stereo(a): stereographic projection of a unit vector"},
    FunctionInfo{"unstereo", 1, "unstereo(x): inverse projection of a point of the e12 plane"},
    FunctionInfo{"probp", 2, "probp(a, b): (1 + a.b) / 2"},
    FunctionInfo{"probm", 2, "probm(a, b): (1 - a.b) / 2"},
    FunctionInfo{"dist", 3, "dist(p, x0, a): distance from p to the line x0 + t a"},
    FunctionInfo{"line", 3, "line(x, x0, a): 1 if x lies on the line x0 + t a, else 0"},
    FunctionInfo{"plane", 3, "plane(x, x0, B): 1 if x lies on the plane through x0 along B, else 0"},
    FunctionInfo{"area", 2, "area(a, b): area of the triangle with sides a, b"},
};

constexpr int max_depth = 256;

constexpr int bp_sum = 10;
constexpr int bp_product = 20;
constexpr int bp_wedge = 30;
constexpr int bp_unary = 40;
constexpr int bp_postfix = 50;

template <typename T>
NodePtr make(T value, Span span) {
  return std::make_unique<Node>(Node{std::move(value), span});
}

Span join(Span a, Span b) { return {a.begin, b.end}; }

class Parser {
public:
  Parser(const std::vector<Token> &tokens, bool assert_mode)
      : tokens_(tokens), assert_mode_(assert_mode) {}

  NodePtr expression(int min_bp = 0) {
    if (++depth_ > max_depth) {
      throw SyntaxError(Errc::parse, "expression nested too deeply", peek().span);
    }
    NodePtr lhs = prefix();
    for (;;) {
      const Token &t = peek();
      const int bp = infix_power(t);
      if (bp == 0 || bp < min_bp) break;
      advance();
      if (bp == bp_postfix) {
        const Span span = join(lhs->span, t.span);
        lhs = make(Reverse{std::move(lhs)}, span);
        continue;
      }
      NodePtr rhs = expression(bp + 1);
      const Span span = join(lhs->span, rhs->span);
      lhs = make(Binary{t.lexeme[0], std::move(lhs), std::move(rhs)}, span);
    }
    --depth_;
    return lhs;
  }

  const Token &peek(std::size_t ahead = 0) const {
    const std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  const Token &advance() {
    const Token &t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void unexpected(const Token &t, std::string_view wanted = {}) const {
    std::string msg = "unexpected ";
    msg += t.kind == TokenKind::end ? std::string("end of input") : "'" + t.lexeme + "'";
    if (!wanted.empty()) msg += ", expected " + std::string(wanted);
    throw SyntaxError(Errc::parse, msg, t.span);
  }

  void expect(TokenKind kind, std::string_view wanted) {
    if (peek().kind != kind) unexpected(peek(), wanted);
    advance();
  }

  // The assert separator is a '~' with whitespace on both sides.
  bool at_separator() const {
    if (!peek().is_op('~') || pos_ == 0) return false;
    const Token &prev = tokens_[pos_ - 1];
    const Token &next = peek(1);
    return prev.span.end < peek().span.begin && peek().span.end < next.span.begin;
  }

private:
  int infix_power(const Token &t) const {
    if (t.kind != TokenKind::op) return 0;
    switch (t.lexeme[0]) {
    case '+': case '-': return bp_sum;
    case '*': case '/': return bp_product;
    case '^': case '.': return bp_wedge;
    case '~': return (assert_mode_ && at_separator()) ? 0 : bp_postfix;
    default: return 0;
    }
  }

  NodePtr prefix() {
    const Token &t = advance();
    switch (t.kind) {
    case TokenKind::number:
      return make(Literal{t.number}, t.span);
    case TokenKind::blade:
      return make(BladeRef{t.blade}, t.span);
    case TokenKind::ident:
      if (peek().kind == TokenKind::lparen) return call(t);
      if (t.lexeme == "let" || t.lexeme == "assert") {
        throw SyntaxError(Errc::parse, "'" + t.lexeme + "' is only allowed at the start of a statement",
                          t.span);
      }
      if (find_function(t.lexeme)) {
        throw SyntaxError(Errc::parse, "function '" + t.lexeme + "' must be called", t.span);
      }
      return make(Variable{t.lexeme}, t.span);
    case TokenKind::lparen: {
      NodePtr inner = expression();
      if (peek().kind != TokenKind::rparen) unexpected(peek(), "')'");
      const Span span = join(t.span, advance().span);
      inner->span = span;
      return inner;
    }
    case TokenKind::op:
      if (t.is_op('-')) {
        NodePtr operand = expression(bp_unary);
        const Span span = join(t.span, operand->span);
        return make(Negate{std::move(operand)}, span);
      }
      break;
    default:
      break;
    }
    unexpected(t, "an operand");
  }

  NodePtr call(const Token &name) {
    const FunctionInfo *info = find_function(name.lexeme);
    if (!info) throw SyntaxError(Errc::parse, "unknown function '" + name.lexeme + "'", name.span);
    advance(); // (
    std::vector<NodePtr> args;
    if (peek().kind != TokenKind::rparen) {
      for (;;) {
        args.push_back(expression());
        if (peek().kind != TokenKind::comma) break;
        advance();
      }
    }
    if (peek().kind != TokenKind::rparen) unexpected(peek(), "',' or ')'");
    const Span span = join(name.span, advance().span);
    if (static_cast<int>(args.size()) != info->arity) {
      throw SyntaxError(Errc::parse,
                        std::string(info->name) + " takes " + std::to_string(info->arity) +
                            " argument(s), got " + std::to_string(args.size()) + "; usage " +
                            std::string(info->usage),
                        span);
    }
    return make(Call{name.lexeme, std::move(args)}, span);
  }

  const std::vector<Token> &tokens_;
  bool assert_mode_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

std::string number_text(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

} // namespace

std::span<const FunctionInfo> function_registry() { return registry; }

const FunctionInfo *find_function(std::string_view name) {
  for (const FunctionInfo &f : registry) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

NodePtr parse_expression(const std::vector<Token> &tokens) {
  Parser p(tokens, false);
  NodePtr node = p.expression();
  if (p.peek().kind != TokenKind::end) p.unexpected(p.peek(), "an operator or end of input");
  return node;
}

NodePtr parse(std::string_view text) { return parse_expression(tokenize(text)); }

Statement parse_statement(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  Statement st;
  const Token &first = tokens.front();

  if (first.kind == TokenKind::ident && first.lexeme == "let") {
    Parser p(tokens, false);
    p.advance();
    const Token &name = p.advance();
    if (name.kind != TokenKind::ident) p.unexpected(name, "a variable name");
    if (name.lexeme == "let" || name.lexeme == "assert" || find_function(name.lexeme)) {
      throw SyntaxError(Errc::parse, "'" + name.lexeme + "' is reserved", name.span);
    }
    p.expect(TokenKind::assign, "'='");
    NodePtr value = p.expression();
    if (p.peek().kind != TokenKind::end) p.unexpected(p.peek(), "end of statement");
    const Span span{first.span.begin, value->span.end};
    st.kind = Statement::Kind::let;
    st.expr = make(Let{name.lexeme, std::move(value)}, span);
    return st;
  }

  if (first.kind == TokenKind::ident && first.lexeme == "assert") {
    Parser p(tokens, true);
    p.advance();
    st.kind = Statement::Kind::assert_close;
    st.lhs = p.expression();
    if (!p.at_separator()) p.unexpected(p.peek(), "' ~ ' (with spaces) between the compared expressions");
    p.advance();
    st.rhs = p.expression();
    if (p.peek().kind == TokenKind::number) st.tolerance = p.advance().number;
    if (p.peek().kind != TokenKind::end) p.unexpected(p.peek(), "a tolerance or end of statement");
    return st;
  }

  Parser p(tokens, false);
  st.expr = p.expression();
  if (p.peek().kind != TokenKind::end) p.unexpected(p.peek(), "an operator or end of input");
  return st;
}

std::string to_sexpr(const Node &node) {
  struct Visitor {
    std::string operator()(const Literal &n) const { return number_text(n.value); }
    std::string operator()(const BladeRef &n) const { return blade_name(n.blade); }
    std::string operator()(const Variable &n) const { return n.name; }
    std::string operator()(const Negate &n) const { return "(neg " + to_sexpr(*n.operand) + ")"; }
    std::string operator()(const Reverse &n) const { return "(rev " + to_sexpr(*n.operand) + ")"; }
    std::string operator()(const Binary &n) const {
      return std::string("(") + n.op + " " + to_sexpr(*n.lhs) + " " + to_sexpr(*n.rhs) + ")";
    }
    std::string operator()(const Call &n) const {
      std::string out = "(" + n.name;
      for (const auto &a : n.args) out += " " + to_sexpr(*a);
      return out + ")";
    }
    std::string operator()(const Let &n) const {
      return "(let " + n.name + " " + to_sexpr(*n.value) + ")";
    }
  };
  return std::visit(Visitor{}, node.value);
}

} // namespace ga::cli
