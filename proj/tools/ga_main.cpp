#include <unistd.h>

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ga/cli/format.hpp"
#include "ga/cli/session.hpp"

using namespace ga::cli;

namespace {

int eval_command(Environment &env, const std::string &expr, bool json) {
  Statement st;
  try {
    st = parse_statement(expr);
  } catch (const ga::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  if (st.kind == Statement::Kind::assert_close) {
    std::istringstream in(expr);
    return run_script(in, env, std::cout, std::cerr);
  }
  const ga::Multivector value = evaluate(*st.expr, env);
  if (json) {
    std::cout << to_json(value).dump() << '\n';
  } else {
    std::cout << format_multivector(value) << '\n';
  }
  return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"ga: geometric algebra calculator"};
  app.require_subcommand(1);

  std::string expr, sig, file;
  bool json = false;

  auto *eval = app.add_subcommand("eval", "evaluate one expression");
  eval->add_option("expr", expr, "expression")->required();
  eval->add_option("--sig", sig, "signature p,q (default 3,0)");
  eval->add_flag("--json", json, "print the result as JSON");

  auto *repl = app.add_subcommand("repl", "interactive session");
  repl->add_option("--sig", sig, "signature p,q (default 3,0)");

  auto *table = app.add_subcommand("table", "emit the Cayley table of an algebra");
  table->add_option("--sig", sig, "signature p,q")->required();
  table->add_flag("--json", json, "emit JSON");

  auto *run = app.add_subcommand("run", "run a script of statements and asserts");
  run->add_option("file", file, "script path")->required();
  run->add_option("--sig", sig, "initial signature p,q (default 3,0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  Environment env;
  try {
    env = Environment::from_env();
    if (!sig.empty()) env.set_signature(parse_signature(sig));
  } catch (const ga::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*eval) return eval_command(env, expr, json);

    if (*repl) return repl_loop(env, std::cin, std::cout, std::cerr, isatty(STDIN_FILENO) != 0);
    if (*table) {
      std::cout << emit_cayley(env.sig, json ? TableFormat::json : TableFormat::text);
      return exit_ok;
    }
    if (*run) return run_script(file, env, std::cout, std::cerr);
  } catch (const ga::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool usage = e.code() == ga::Errc::table_too_large ||
                       e.code() == ga::Errc::lexical || e.code() == ga::Errc::parse;
    return usage ? exit_usage : exit_failure;
  }
  return exit_usage;
}
