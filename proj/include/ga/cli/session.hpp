#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ga/cli/evaluator.hpp"

namespace ga::cli {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

// Reads statements line by line, printing each expression's canonical form.
// Errors are reported and the loop continues. Commands:
//   :sig p,q   switch algebra (clears bindings)
//   :tol x     set the comparison tolerance
//   :help      list functions
//   :quit      leave
int repl_loop(Environment &env, std::istream &in, std::ostream &out, std::ostream &err,
              bool interactive = false);

// Executes a script: one statement per line, `#` starts a comment, and
// `assert lhs ~ rhs [tol]` lines are checked against the tolerance.
// Returns 0 when every statement succeeds, 1 on assert or evaluation
// failures, 2 when the file is unreadable or a line does not parse.
int run_script(const std::filesystem::path &path, Environment &env, std::ostream &out,
               std::ostream &err);
int run_script(std::istream &in, Environment &env, std::ostream &out, std::ostream &err);

} // namespace ga::cli
