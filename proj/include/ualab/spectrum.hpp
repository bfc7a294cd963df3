#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ualab/clone.hpp"

namespace ualab {

/// Pr(t ~ t' | A): the fraction of k-tuples satisfying the equation,
/// with k = equation.vars. Both sides are compiled to tables and compared
/// with one popcount pass.
inline Rational equation_probability(const FiniteAlgebra& alg, const Equation& eq) {
  FunctionTable lhs = compile_term(alg, eq.lhs, eq.vars);
  FunctionTable rhs = compile_term(alg, eq.rhs, eq.vars);
  std::size_t agree = lhs.agreement_count(rhs);
  return Rational(BigInt(static_cast<std::uint64_t>(agree)),
                  BigInt(static_cast<std::uint64_t>(lhs.size())));
}

/// The arity-k slice of PSpec(A), computed as coincidence ratios over all
/// pairs of clone tables. When `complete` is false the value set is a
/// guaranteed subset of the true slice.
struct SpectrumReport {
  std::string algebra;
  int arity = 0;
  std::vector<Rational> values;  // sorted ascending, reduced
  bool complete = false;
  std::uint64_t pair_count = 0;  // unordered clone pairs the slice ranges over
};

namespace detail {

/// Marks every agreement count that occurs among unordered pairs of the
/// clone tables. Stops early once all n^k + 1 possible counts are seen.
inline std::vector<char> pair_agreement_counts(const CloneSet& clone, int threads) {
  std::size_t len = clone.tables.empty() ? 1 : clone.tables[0].size();
  std::vector<char> found(len + 1, 0);
  std::size_t s = clone.tables.size();
  if (s == 0) return found;

  // packed fast path: whole tables as single 64-bit words
  std::optional<std::vector<std::uint64_t>> keys;
  if (clone.tables[0].packed_key()) {
    keys.emplace();
    keys->reserve(s);
    for (const auto& t : clone.tables) keys->push_back(*t.packed_key());
  }
  int bits = clone.tables[0].entry_bits();
  std::uint64_t lane = 0;
  for (std::size_t f = 0; f < len; ++f) lane |= std::uint64_t(1) << (f * static_cast<std::size_t>(bits));

  auto scan_rows = [&](std::size_t r0, std::size_t r1, std::vector<char>& local) {
    std::size_t need = len + 1;
    std::size_t have = 0;
    for (char c : local)
      if (c) ++have;
    if (keys) {
      const std::uint64_t* kk = keys->data();
      for (std::size_t i = r0; i < r1; ++i) {
        std::uint64_t a = kk[i];
        for (std::size_t j = i; j < s; ++j) {
          std::uint64_t diff = a ^ kk[j];
          std::uint64_t fold = diff;
          for (int b = 1; b < bits; ++b) fold |= diff >> b;
          std::size_t agree = len - static_cast<std::size_t>(std::popcount(fold & lane));
          if (!local[agree]) {
            local[agree] = 1;
            if (++have == need) return;
          }
        }
      }
    } else {
      for (std::size_t i = r0; i < r1; ++i) {
        for (std::size_t j = i; j < s; ++j) {
          std::size_t agree = clone.tables[i].agreement_count(clone.tables[j]);
          if (!local[agree]) {
            local[agree] = 1;
            if (++have == need) return;
          }
        }
      }
    }
  };

  if (threads <= 1 || s < 1024) {
    scan_rows(0, s, found);
    return found;
  }
  std::size_t nw = static_cast<std::size_t>(threads);
  std::vector<std::vector<char>> locals(nw, found);
  std::vector<std::thread> pool;
  std::size_t chunk = (s + nw - 1) / nw;
  for (std::size_t w = 0; w < nw; ++w) {
    std::size_t r0 = w * chunk;
    std::size_t r1 = std::min(s, r0 + chunk);
    if (r0 >= r1) break;
    pool.emplace_back([&, r0, r1, w] { scan_rows(r0, r1, locals[w]); });
  }
  for (auto& t : pool) t.join();
  for (const auto& l : locals)
    for (std::size_t c = 0; c <= len; ++c)
      if (l[c]) found[c] = 1;
  return found;
}

}  // namespace detail

inline SpectrumReport pspec_from_clone(const std::string& name, const CloneSet& clone,
                                       int threads = 1) {
  SpectrumReport rep;
  rep.algebra = name;
  rep.arity = clone.arity;
  rep.complete = clone.complete;
  std::uint64_t s = clone.tables.size();
  rep.pair_count = s * (s + 1) / 2;
  std::vector<char> found = detail::pair_agreement_counts(clone, threads);
  std::size_t len = clone.tables.empty() ? 1 : clone.tables[0].size();
  for (std::size_t c = 0; c < found.size(); ++c)
    if (found[c])
      rep.values.emplace_back(BigInt(static_cast<std::uint64_t>(c)),
                              BigInt(static_cast<std::uint64_t>(len)));
  return rep;
}

inline SpectrumReport pspec_at(const FiniteAlgebra& alg, int k,
                               std::uint64_t clone_budget = kDefaultCloneBudget,
                               int threads = 1) {
  CloneSet clone = generate_clone(alg, k, clone_budget);
  return pspec_from_clone(alg.name(), clone, threads);
}

/// A x B with pair encoding (a, b) -> a * |B| + b and componentwise tables.
inline FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!a.same_signature(b)) throw DomainError("direct_product: signature mismatch");
  int na = a.size(), nb = b.size();
  int n = na * nb;
  FiniteAlgebra prod(a.name() + "x" + b.name(), n);
  for (std::size_t op = 0; op < a.op_count(); ++op) {
    const FunctionTable& fa = a.table(op);
    const FunctionTable& fb = b.table(op);
    int m = fa.arity();
    FunctionTable t(n, m);
    std::size_t len = t.size();
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<Elem> pair_tuple = index_tuple(i, m, n);
      std::vector<Elem> ta(pair_tuple.size()), tb(pair_tuple.size());
      for (std::size_t j = 0; j < pair_tuple.size(); ++j) {
        ta[j] = pair_tuple[j] / static_cast<Elem>(nb);
        tb[j] = pair_tuple[j] % static_cast<Elem>(nb);
      }
      Elem va = fa(std::span<const Elem>(ta));
      Elem vb = fb(std::span<const Elem>(tb));
      t.set(i, va * static_cast<Elem>(nb) + vb);
    }
    prod.add_op(a.symbol(op).name, t);
  }
  return prod;
}

/// Result of checking the orbit bound at one arity. Equality is asserted
/// only when the algebra is automorphism-primal at k and Fix(A) has at
/// least two elements.
struct OrbitInclusion {
  bool holds = false;
  bool strict = false;
  bool spectrum_complete = false;
  bool equality_expected = false;
  bool equality_holds = false;
  std::optional<Rational> witness;  // spectrum value outside the bound
};

inline OrbitInclusion check_orbit_inclusion(const FiniteAlgebra& alg, int k,
                                            std::uint64_t clone_budget = kDefaultCloneBudget,
                                            std::uint64_t orbit_budget = std::uint64_t(1) << 24) {
  CloneSet clone = generate_clone(alg, k, clone_budget);
  SpectrumReport spec = pspec_from_clone(alg.name(), clone);
  AutomorphismGroup aut = automorphism_group(alg);
  std::vector<Rational> bound = orbit_bound_at(aut, k, orbit_budget);
  std::set<Rational> bound_set(bound.begin(), bound.end());

  OrbitInclusion r;
  r.spectrum_complete = spec.complete;
  r.holds = true;
  for (const Rational& v : spec.values) {
    if (!bound_set.count(v)) {
      r.holds = false;
      r.witness = v;
      break;
    }
  }
  r.strict = r.holds && spec.values.size() < bound.size();
  if (clone.complete && aut.fixed_points.size() >= 2) {
    CompatibleSet compat = compatible_functions(alg, k, aut, /*budget=*/0);  // count only
    r.equality_expected = is_automorphism_primal_at(clone, compat);
  }
  r.equality_holds = r.holds && spec.values.size() == bound.size();
  return r;
}

}  // namespace ualab
