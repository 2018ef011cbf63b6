#pragma once

#include <map>
#include <string>

#include "ga/cli/parser.hpp"
#include "ga/multivector.hpp"

namespace ga::cli {

inline constexpr double default_tolerance = 1e-12;

struct Environment {
  Signature sig = Signature::euclidean(3);
  std::map<std::string, Multivector> bindings;
  Tolerance tol{default_tolerance, default_tolerance};

  // Replaces the algebra; bindings from the old algebra are dropped.
  void set_signature(Signature s);
  void set_tolerance(double t);

  // Default environment with the tolerance taken from GA_TOL when set.
  // Throws Error(Errc::evaluation) when GA_TOL is not a positive number.
  static Environment from_env();
};

// Evaluates an expression tree; a Let node binds its value and returns it.
// Operators: + - * (geometric) / (multiply by inverse) ^ (outer)
// . (contraction), unary -, postfix ~ (reverse).
Multivector evaluate(const Node &node, Environment &env);

// Parses "p,q" (spaces allowed).
Signature parse_signature(std::string_view text);

} // namespace ga::cli
