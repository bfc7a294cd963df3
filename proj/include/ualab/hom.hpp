#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ualab/spectrum.hpp"
#include "ualab/term.hpp"

namespace ualab {

/// An explicit map between the universes of two algebras with the same
/// signature, plus its verified classification.
struct AlgebraMap {
  const FiniteAlgebra* source = nullptr;
  const FiniteAlgebra* target = nullptr;
  std::vector<Elem> mapping;  // length |source|, values in [0, |target|)
};

struct HomClassification {
  bool is_hom = false;
  bool injective = false;
  bool surjective = false;
  std::optional<std::size_t> kappa;  // common fiber size, when all fibers match
};

/// Verifies f(op(x)) = op(f x) entrywise for every operation, and
/// classifies the map. kappa is reported only when every fiber over the
/// target has the same size (which forces surjectivity).
inline HomClassification check_homomorphism(const AlgebraMap& map) {
  const FiniteAlgebra& src = *map.source;
  const FiniteAlgebra& dst = *map.target;
  if (!src.same_signature(dst)) throw DomainError("check_homomorphism: signature mismatch");
  if (map.mapping.size() != static_cast<std::size_t>(src.size()))
    throw DomainError("check_homomorphism: mapping length != |source|");
  for (Elem v : map.mapping)
    if (v >= static_cast<Elem>(dst.size())) throw DomainError("check_homomorphism: value outside target");

  HomClassification c;
  c.is_hom = true;
  int n = src.size();
  for (std::size_t op = 0; op < src.op_count() && c.is_hom; ++op) {
    const FunctionTable& fs = src.table(op);
    const FunctionTable& fd = dst.table(op);
    int m = fs.arity();
    std::size_t len = fs.size();
    std::vector<Elem> tuple;
    for (std::size_t i = 0; i < len; ++i) {
      tuple = index_tuple(i, m, n);
      for (auto& x : tuple) x = map.mapping[x];
      if (map.mapping[fs.get(i)] != fd.get(tuple_index(std::span<const Elem>(tuple), dst.size()))) {
        c.is_hom = false;
        break;
      }
    }
  }

  std::vector<std::size_t> fiber(static_cast<std::size_t>(dst.size()), 0);
  for (Elem v : map.mapping) ++fiber[v];
  c.surjective = std::all_of(fiber.begin(), fiber.end(), [](std::size_t f) { return f > 0; });
  c.injective = std::all_of(fiber.begin(), fiber.end(), [](std::size_t f) { return f <= 1; });
  if (c.surjective && std::all_of(fiber.begin(), fiber.end(),
                                  [&](std::size_t f) { return f == fiber[0]; }))
    c.kappa = fiber[0];
  return c;
}

enum class LemmaKind { Mono, Epi, Product, Kappa };

/// Both sides of the checked (in)equality, exactly.
struct LemmaResult {
  bool holds = false;
  Rational lhs;
  Rational rhs;
};

namespace detail {

inline Rational size_ratio_pow(const FiniteAlgebra& num, const FiniteAlgebra& den, int k) {
  return Rational(BigInt(num.size()), BigInt(den.size())).pow(static_cast<unsigned>(k));
}

}  // namespace detail

/// Checks one part of the elementary lemma for the map f: source -> target.
///   mono:  Pr(src) <= (|tgt|/|src|)^k * Pr(tgt)          (f injective hom)
///   epi:   1 - Pr(src) >= (|tgt|/|src|)^k * (1 - Pr(tgt)) (f surjective hom)
///   kappa: Pr(src) <= Pr(tgt) <= kappa * Pr(src)          (constant fibers)
/// Hypotheses are verified first; a violation is an error naming the
/// failed hypothesis, not a `holds = false` result.
inline LemmaResult lemma_elementary_check(LemmaKind kind, const Equation& eq,
                                          const AlgebraMap& map) {
  if (kind == LemmaKind::Product)
    throw DomainError("lemma_elementary_check: product kind takes an algebra pair, not a map");
  HomClassification c = check_homomorphism(map);
  if (!c.is_hom) throw DomainError("lemma hypothesis failed: map is not a homomorphism");
  const FiniteAlgebra& src = *map.source;
  const FiniteAlgebra& dst = *map.target;
  Rational ps = equation_probability(src, eq);
  Rational pt = equation_probability(dst, eq);

  LemmaResult r;
  switch (kind) {
    case LemmaKind::Mono: {
      if (!c.injective) throw DomainError("lemma hypothesis failed: mono kind needs an injective map");
      r.lhs = ps;
      r.rhs = detail::size_ratio_pow(dst, src, eq.vars) * pt;
      r.holds = r.lhs <= r.rhs;
      break;
    }
    case LemmaKind::Epi: {
      if (!c.surjective) throw DomainError("lemma hypothesis failed: epi kind needs a surjective map");
      r.lhs = Rational(1) - ps;
      r.rhs = detail::size_ratio_pow(dst, src, eq.vars) * (Rational(1) - pt);
      r.holds = r.lhs >= r.rhs;
      break;
    }
    case LemmaKind::Kappa: {
      if (!c.surjective) throw DomainError("lemma hypothesis failed: kappa kind needs a surjective map");
      if (!c.kappa) throw DomainError("lemma hypothesis failed: kappa kind needs constant fiber sizes");
      Rational cap = Rational(BigInt(static_cast<std::uint64_t>(*c.kappa))) * ps;
      r.lhs = ps;
      r.rhs = cap;
      r.holds = ps <= pt && pt <= cap;
      break;
    }
    case LemmaKind::Product:
      break;  // unreachable
  }
  return r;
}

/// Product part: Pr(A x B) = Pr(A) * Pr(B), demanded as exact equality.
inline LemmaResult lemma_product_check(const Equation& eq, const FiniteAlgebra& a,
                                       const FiniteAlgebra& b) {
  if (!a.same_signature(b)) throw DomainError("lemma hypothesis failed: product kind needs matching signatures");
  FiniteAlgebra prod = direct_product(a, b);
  LemmaResult r;
  r.lhs = equation_probability(prod, eq);
  r.rhs = equation_probability(a, eq) * equation_probability(b, eq);
  r.holds = r.lhs == r.rhs;
  return r;
}

/// Map file format: first non-comment line `map <srcAlg> <dstAlg>`, then
/// |source| integers (whitespace separated) giving the image of 0, 1, ...
/// The named algebras must match the supplied ones.
inline std::vector<Elem> parse_map_file(const std::string& text, const FiniteAlgebra& src,
                                        const FiniteAlgebra& dst) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::string> tokens;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) break;
  }
  if (tokens.size() != 3 || tokens[0] != "map")
    throw ParseError("expected header 'map <srcAlg> <dstAlg>'", lineno);
  if (tokens[1] != src.name() || tokens[2] != dst.name())
    throw ParseError("map header names do not match the supplied algebras", lineno);

  std::vector<Elem> mapping;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long v;
    while (ls >> v) {
      if (v < 0 || v >= dst.size()) throw ParseError("map value out of range", lineno);
      mapping.push_back(static_cast<Elem>(v));
    }
  }
  if (mapping.size() != static_cast<std::size_t>(src.size()))
    throw ParseError("map needs exactly |source| values", lineno);
  return mapping;
}

/// Closure of a subset under all operations (including nullary constants).
inline std::vector<Elem> subalgebra_closure(const FiniteAlgebra& alg, std::vector<Elem> seed) {
  int n = alg.size();
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (Elem x : seed) {
    if (x >= static_cast<Elem>(n)) throw DomainError("subalgebra_closure: element out of range");
    in[x] = true;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t op = 0; op < alg.op_count(); ++op) {
      const FunctionTable& f = alg.table(op);
      int m = f.arity();
      std::size_t len = f.size();
      for (std::size_t i = 0; i < len; ++i) {
        std::vector<Elem> tuple = index_tuple(i, m, n);
        bool inside = true;
        for (Elem x : tuple)
          if (!in[x]) {
            inside = false;
            break;
          }
        if (inside && !in[f.get(i)]) {
          in[f.get(i)] = true;
          grew = true;
        }
      }
    }
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < static_cast<Elem>(n); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

/// The algebra induced on a subuniverse (which must be closed), with
/// elements renumbered in ascending order. The inclusion map back into the
/// parent is returned alongside.
struct InducedSubalgebra {
  FiniteAlgebra algebra;
  std::vector<Elem> inclusion;  // new index -> parent element
};

inline InducedSubalgebra induced_subalgebra(const FiniteAlgebra& alg, const std::vector<Elem>& universe,
                                            const std::string& name) {
  int n = alg.size();
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < universe.size(); ++i) rank[universe[i]] = static_cast<int>(i);
  int m = static_cast<int>(universe.size());
  FiniteAlgebra sub(name, m);
  for (std::size_t op = 0; op < alg.op_count(); ++op) {
    const FunctionTable& f = alg.table(op);
    int ar = f.arity();
    FunctionTable t(m, ar);
    std::size_t len = t.size();
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<Elem> tuple = index_tuple(i, ar, m);
      for (auto& x : tuple) x = universe[x];
      Elem v = f(std::span<const Elem>(tuple));
      if (rank[v] < 0) throw DomainError("induced_subalgebra: universe not closed under " + alg.symbol(op).name);
      t.set(i, static_cast<Elem>(rank[v]));
    }
    sub.add_op(alg.symbol(op).name, t);
  }
  return {std::move(sub), universe};
}

}  // namespace ualab
