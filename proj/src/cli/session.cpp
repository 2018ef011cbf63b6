#include "ga/cli/session.hpp"

#include <charconv>
#include <fstream>
#include <iostream>

#include "ga/cli/format.hpp"

namespace ga::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

enum class Outcome { ok, quit, syntax_error, failure };

void print_help(std::ostream &out) {
  out << "statements: <expr> | let name = <expr> | assert <expr> ~ <expr> [tol]\n"
         "operators:  + - * / ^ (outer) . (inner) unary - postfix ~ (reverse)\n"
         "commands:   :sig p,q  :tol x  :help  :quit\n"
         "functions:\n";
  for (const FunctionInfo &f : function_registry()) out << "  " << f.usage << '\n';
}

// Runs one line. `where` prefixes messages ("" in the REPL, "line N: " in
// scripts).
Outcome execute_line(std::string_view line, Environment &env, std::ostream &out,
                     std::ostream &err, const std::string &where) {
  const std::string_view text = trim(line);
  if (text.empty()) return Outcome::ok;

  try {
    if (text.front() == ':') {
      const auto space = text.find_first_of(" \t");
      const std::string_view cmd = text.substr(0, space);
      const std::string_view arg =
          space == std::string_view::npos ? std::string_view{} : trim(text.substr(space));
      if (cmd == ":quit" || cmd == ":q") return Outcome::quit;
      if (cmd == ":help") {
        print_help(out);
      } else if (cmd == ":sig") {
        env.set_signature(parse_signature(arg));
      } else if (cmd == ":tol") {
        double t = 0.0;
        const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), t);
        if (ec != std::errc() || ptr != arg.data() + arg.size()) {
          throw Error(Errc::evaluation, "usage: :tol <positive number>");
        }
        env.set_tolerance(t);
      } else {
        throw Error(Errc::evaluation, "unknown command '" + std::string(cmd) + "' (try :help)");
      }
      return Outcome::ok;
    }

    const Statement st = parse_statement(text);
    switch (st.kind) {
    case Statement::Kind::let:
      evaluate(*st.expr, env);
      return Outcome::ok;
    case Statement::Kind::expression:
      out << format_multivector(evaluate(*st.expr, env)) << '\n';
      return Outcome::ok;
    case Statement::Kind::assert_close: {
      const Multivector lhs = evaluate(*st.lhs, env);
      const Multivector rhs = evaluate(*st.rhs, env);
      const double tol = st.tolerance.value_or(env.tol.abs);
      const double diff = coefficient_distance(lhs, rhs);
      if (diff <= tol) return Outcome::ok;
      err << where << "assertion failed: |lhs - rhs| = " << format_number(diff) << " > "
          << format_number(tol) << "\n  lhs = " << format_multivector(lhs)
          << "\n  rhs = " << format_multivector(rhs) << '\n';
      return Outcome::failure;
    }
    }
  } catch (const Error &e) {
    err << where << "error: " << e.what() << '\n';
    const bool syntax = e.code() == Errc::lexical || e.code() == Errc::parse;
    return syntax ? Outcome::syntax_error : Outcome::failure;
  }
  return Outcome::ok;
}

std::string strip_comment(const std::string &line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

} // namespace

int repl_loop(Environment &env, std::istream &in, std::ostream &out, std::ostream &err,
              bool interactive) {
  std::string line;
  for (;;) {
    if (interactive) out << "ga> " << std::flush;
    if (!std::getline(in, line)) break;
    if (execute_line(line, env, out, err, "") == Outcome::quit) break;
    out.flush();
  }
  if (interactive) out << '\n';
  return exit_ok;
}

int run_script(std::istream &in, Environment &env, std::ostream &out, std::ostream &err) {
  int failures = 0;
  int syntax_errors = 0;
  int asserts = 0;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    const std::string code = strip_comment(line);
    if (trim(code).starts_with("assert")) ++asserts;
    const auto outcome =
        execute_line(code, env, out, err, "line " + std::to_string(number) + ": ");
    if (outcome == Outcome::quit) break;
    if (outcome == Outcome::failure) ++failures;
    if (outcome == Outcome::syntax_error) ++syntax_errors;
  }
  if (failures + syntax_errors > 0) {
    err << failures + syntax_errors << " failing statement(s), " << asserts << " assert(s)\n";
  }
  if (syntax_errors > 0) return exit_usage;
  return failures > 0 ? exit_failure : exit_ok;
}

int run_script(const std::filesystem::path &path, Environment &env, std::ostream &out,
               std::ostream &err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read " << path.string() << '\n';
    return exit_usage;
  }
  return run_script(in, env, out, err);
}

} // namespace ga::cli
