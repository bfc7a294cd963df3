#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "ualab/algebra.hpp"
#include "ualab/rational.hpp"

namespace ualab {

/// Syntax tree over a signature: either a variable x<i> or an operation
/// applied to subterms. Ops are stored by name and resolved against an
/// algebra at evaluation time.
struct Term {
  int var = -1;  // >= 0 for variables
  std::string op;
  std::vector<Term> args;

  static Term variable(int i) {
    if (i < 0) throw DomainError("negative variable index");
    Term t;
    t.var = i;
    return t;
  }

  static Term apply(std::string op_name, std::vector<Term> arguments) {
    Term t;
    t.op = std::move(op_name);
    t.args = std::move(arguments);
    return t;
  }

  bool is_var() const { return var >= 0; }

  /// Largest variable index used, or -1 for a variable-free term.
  int max_var() const {
    if (is_var()) return var;
    int m = -1;
    for (const auto& a : args) m = std::max(m, a.max_var());
    return m;
  }

  std::string str() const {
    if (is_var()) return "x" + std::to_string(var);
    std::string s = "(" + op;
    for (const auto& a : args) s += " " + a.str();
    return s + ")";
  }
};

/// An ordered pair of terms plus the explicit variable count k.
/// k may exceed 1 + max index (dummy variables), never be below it.
struct Equation {
  Term lhs;
  Term rhs;
  int vars;

  Equation(Term l, Term r, int k) : lhs(std::move(l)), rhs(std::move(r)), vars(k) {
    if (k < 1) throw DomainError("equation needs at least one variable");
    if (k <= std::max(lhs.max_var(), rhs.max_var()))
      throw DomainError("equation variable count below max variable index");
  }

  std::string str() const { return "(= " + lhs.str() + " " + rhs.str() + ")"; }
};

namespace detail {

struct SexprLexer {
  const std::string& s;
  std::size_t p = 0;

  void skip_ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool at_end() {
    skip_ws();
    return p >= s.size();
  }
  char peek() {
    skip_ws();
    if (p >= s.size()) throw ParseError("unexpected end of term");
    return s[p];
  }
  std::string atom() {
    skip_ws();
    std::size_t start = p;
    while (p < s.size() && !std::isspace(static_cast<unsigned char>(s[p])) && s[p] != '(' && s[p] != ')') ++p;
    if (start == p) throw ParseError("expected atom in term");
    return s.substr(start, p - start);
  }
};

inline Term parse_term_rec(SexprLexer& lx, const FiniteAlgebra& alg) {
  if (lx.peek() == '(') {
    ++lx.p;
    std::string op = lx.atom();
    auto oi = alg.op_index(op);
    if (!oi) throw ParseError("unknown symbol: " + op);
    std::vector<Term> args;
    while (lx.peek() != ')') args.push_back(parse_term_rec(lx, alg));
    ++lx.p;
    int arity = alg.symbol(*oi).arity;
    if (static_cast<int>(args.size()) != arity)
      throw ParseError(op + " expects " + std::to_string(arity) + " arguments, got " +
                       std::to_string(args.size()));
    return Term::apply(op, std::move(args));
  }
  std::string a = lx.atom();
  if (a.size() >= 2 && a[0] == 'x') {
    std::string digits = a.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return Term::variable(std::stoi(digits));
  }
  throw ParseError("malformed s-expression near '" + a + "'");
}

}  // namespace detail

/// Parse an s-expression term: variables "x0 x1 ...", applications
/// "(meet x0 x1)", nullary ops "(zero)".
inline Term parse_term(const std::string& text, const FiniteAlgebra& alg) {
  detail::SexprLexer lx{text};
  Term t = detail::parse_term_rec(lx, alg);
  if (!lx.at_end()) throw ParseError("trailing input after term");
  return t;
}

/// Parse "(= <term> <term>)". By default vars = 1 + max index (at least 1);
/// an explicit override can widen it with dummy variables.
inline Equation parse_equation(const std::string& text, const FiniteAlgebra& alg,
                               int vars_override = 0) {
  detail::SexprLexer lx{text};
  if (lx.peek() != '(') throw ParseError("equation must start with '(='");
  ++lx.p;
  std::string eq = lx.atom();
  if (eq != "=") throw ParseError("equation must start with '(='");
  Term l = detail::parse_term_rec(lx, alg);
  Term r = detail::parse_term_rec(lx, alg);
  if (lx.peek() != ')') throw ParseError("expected ')' closing equation");
  ++lx.p;
  if (!lx.at_end()) throw ParseError("trailing input after equation");
  int k = std::max(1, std::max(l.max_var(), r.max_var()) + 1);
  if (vars_override > 0) {
    if (vars_override < k) throw ParseError("explicit variable count below max variable index");
    k = vars_override;
  }
  return Equation(std::move(l), std::move(r), k);
}

/// Interpret a term at a point of A^k.
inline Elem eval_term(const FiniteAlgebra& alg, const Term& t, std::span<const Elem> assignment) {
  if (t.is_var()) {
    if (static_cast<std::size_t>(t.var) >= assignment.size())
      throw DomainError("missing variable binding for x" + std::to_string(t.var));
    return assignment[static_cast<std::size_t>(t.var)];
  }
  auto oi = alg.op_index(t.op);
  if (!oi) throw DomainError("unknown op: " + t.op);
  std::vector<Elem> vals(t.args.size());
  for (std::size_t i = 0; i < t.args.size(); ++i) vals[i] = eval_term(alg, t.args[i], assignment);
  return alg.table(*oi)(std::span<const Elem>(vals));
}

inline Elem eval_term(const FiniteAlgebra& alg, const Term& t, std::initializer_list<Elem> a) {
  return eval_term(alg, t, std::span<const Elem>(a.begin(), a.size()));
}

/// Materialize t^A at arity k as a FunctionTable, built bottom-up by
/// pointwise composition so the cost is O(|term| * n^k).
inline FunctionTable compile_term(const FiniteAlgebra& alg, const Term& t, int k) {
  if (k <= t.max_var()) throw DomainError("compile arity below max variable index");
  if (t.is_var()) return FunctionTable::projection(alg.size(), k, t.var);
  auto oi = alg.op_index(t.op);
  if (!oi) throw DomainError("unknown op: " + t.op);
  const FunctionTable& f = alg.table(*oi);
  if (f.arity() == 0) return FunctionTable::constant(alg.size(), k, f.get(0));
  std::vector<FunctionTable> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(compile_term(alg, a, k));
  return compose(f, std::span<const FunctionTable>(args));
}

}  // namespace ualab
