#pragma once

#include <string>

#include <json.hpp>

#include "ga/algebra.hpp"

namespace ga::cli {

// Shortest text that reads back as the same double (at most 17 significant
// digits).
std::string format_number(double v);

// Canonical text: terms in grade-then-blade order, e.g. "5 - 5*e12",
// "-e1 + 0.5*e23", "0" for the zero multivector. Parses back to the same
// value.
std::string format_multivector(const Multivector &m);

// {"signature": [p, q], "terms": {"1": 5, "e12": -5}}
nlohmann::json to_json(const Multivector &m);

enum class TableFormat { text, json };

// Signed blade products as "1", "-e12", ... in canonical row/column order.
std::string format_signed_blade(const SignedBlade &entry);

std::string emit_cayley(const Signature &sig, TableFormat format);

} // namespace ga::cli
