#include "ga/cli/evaluator.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "ga/geometry.hpp"
#include "ga/stereo.hpp"

namespace ga::cli {

namespace {

[[noreturn]] void fail(const std::string &message) { throw Error(Errc::evaluation, message); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

double scalar_value(const Multivector &m, const char *what) {
  if (!m.is_homogeneous(0)) fail(std::string(what) + " must be a scalar");
  return m.scalar_part();
}

class Evaluator {
public:
  explicit Evaluator(Environment &env) : env_(env) {}

  Multivector operator()(const Literal &n) const { return scalar(n.value); }

  Multivector operator()(const BladeRef &n) const {
    if (n.blade.bits >= env_.sig.blade_count()) {
      fail("basis blade " + blade_name(n.blade) + " does not exist in G(" +
           std::to_string(env_.sig.p()) + "," + std::to_string(env_.sig.q()) + ")");
    }
    return Multivector::blade(env_.sig, n.blade);
  }

  Multivector operator()(const Variable &n) const {
    const auto it = env_.bindings.find(n.name);
    if (it == env_.bindings.end()) fail("unbound variable '" + n.name + "'");
    return it->second;
  }

  Multivector operator()(const Negate &n) const { return -eval(*n.operand); }
  Multivector operator()(const Reverse &n) const { return reverse(eval(*n.operand)); }

  Multivector operator()(const Binary &n) const {
    const Multivector lhs = eval(*n.lhs);
    const Multivector rhs = eval(*n.rhs);
    switch (n.op) {
    case '+': return lhs + rhs;
    case '-': return lhs - rhs;
    case '*': return lhs * rhs;
    case '^': return outer_product(lhs, rhs);
    case '.': return inner_product(lhs, rhs);
    case '/':
      if (rhs.is_homogeneous(0)) {
        if (rhs.is_zero()) throw Error(Errc::not_invertible, "division by zero");
        return lhs / rhs.scalar_part();
      }
      return lhs * inverse(rhs, env_.tol);
    }
    fail(std::string("unknown operator ") + n.op);
  }

  Multivector operator()(const Let &n) const {
    Multivector value = eval(*n.value);
    env_.bindings.insert_or_assign(n.name, value);
    return value;
  }

  Multivector operator()(const Call &n) const {
    std::vector<Multivector> args;
    args.reserve(n.args.size());
    for (const auto &a : n.args) args.push_back(eval(*a));
    return call(n.name, args);
  }

private:
  Multivector eval(const Node &node) const { return std::visit(*this, node.value); }
  Multivector scalar(double v) const { return Multivector::scalar(env_.sig, v); }
  Multivector flag(bool v) const { return scalar(v ? 1.0 : 0.0); }

  Multivector call(const std::string &name, const std::vector<Multivector> &a) const {
    const Tolerance &tol = env_.tol;
    const double unit_tol = tol.abs;
    if (name == "exp") return exp_bivector(a[0], tol);
    if (name == "rev") return reverse(a[0]);
    if (name == "inv") return inverse(a[0], tol);
    if (name == "grade") {
      const double k = scalar_value(a[1], "grade index");
      if (k < 0 || k != std::floor(k)) fail("grade index must be a non-negative integer");
      return grade_part(a[0], static_cast<int>(std::min(k, 64.0)));
    }
    if (name == "norm") return scalar(norm(a[0]));
    if (name == "dual") return dual_g3(a[0]);
    if (name == "cross") return cross_product(a[0], a[1]);
    if (name == "proj") return project(a[0], a[1]);
    if (name == "rej") return reject(a[0], a[1]);
    if (name == "reflect") return reflect_in_plane(a[0], a[1], tol);
    if (name == "reflectn") return reflect_normal(a[0], a[1], tol);
    if (name == "rot") return rotate(a[0], Rotor::from_multivector(a[1], tol));
    if (name == "rotor") return rotor_between(a[0], a[1], tol).multivector();
    if (name == "rotor2") return rotor_from_reflections(a[0], a[1], tol).multivector();
    if (name == "stereo") return stereo_project(SpherePoint(a[0], unit_tol)).vector();
    if (name == "unstereo") return stereo_unproject(PlanePoint(a[0], unit_tol)).vector();
    if (name == "probp") {
      return scalar(prob_plus(SpherePoint(a[0], unit_tol), SpherePoint(a[1], unit_tol)));
    }
    if (name == "probm") {
      return scalar(prob_minus(SpherePoint(a[0], unit_tol), SpherePoint(a[1], unit_tol)));
    }
    if (name == "dist") return scalar(distance_to_line(Line(a[1], a[2]), a[0]));
    if (name == "line") return flag(line_contains(Line(a[1], a[2]), a[0], tol.abs));
    if (name == "plane") return flag(plane_contains(Plane(a[1], a[2], tol), a[0], tol.abs));
    if (name == "area") return scalar(triangle_area(Triangle::from_sides(a[0], a[1])));
    fail("unknown function '" + name + "'");
  }

  Environment &env_;
};

} // namespace

void Environment::set_signature(Signature s) {
  sig = s;
  bindings.clear();
}

void Environment::set_tolerance(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) fail("tolerance must be a positive number");
  tol = Tolerance{t, t};
}

Environment Environment::from_env() {
  Environment env;
  if (const char *value = std::getenv("GA_TOL")) {
    const auto t = to_double(value);
    if (!t) fail("GA_TOL is not a number: '" + std::string(value) + "'");
    env.set_tolerance(*t);
  }
  return env;
}

Multivector evaluate(const Node &node, Environment &env) {
  return std::visit(Evaluator(env), node.value);
}

Signature parse_signature(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) fail("signature must be written as p,q");
  const auto p = to_double(text.substr(0, comma));
  const auto q = to_double(text.substr(comma + 1));
  if (!p || !q || *p != std::floor(*p) || *q != std::floor(*q) || std::abs(*p) > 64 ||
      std::abs(*q) > 64) {
    fail("signature must be written as p,q with integers p and q");
  }
  return Signature(static_cast<int>(*p), static_cast<int>(*q));
}

} // namespace ga::cli
