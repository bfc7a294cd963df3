#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "ualab/clone.hpp"

namespace ualab {

/// Coincidence ratio mu(f, g) = |{x : f(x) = g(x)}| / n^k. Not defined
/// for nullary functions.
inline Rational coincidence_mu(const FunctionTable& f, const FunctionTable& g) {
  if (f.arity() < 1) throw DomainError("coincidence ratio undefined for arity 0");
  std::size_t agree = f.agreement_count(g);
  return Rational(BigInt(static_cast<std::uint64_t>(agree)),
                  BigInt(static_cast<std::uint64_t>(f.size())));
}

/// The clone table maximizing mu(f, .), ties broken towards the
/// canonically least table. The clone's canonical order makes the first
/// strict maximum the least witness.
inline std::pair<FunctionTable, Rational> best_approximation(const CloneSet& clone,
                                                             const FunctionTable& f) {
  if (clone.tables.empty()) throw DomainError("best_approximation: empty clone");
  std::size_t best = 0;
  const FunctionTable* arg = nullptr;
  for (const auto& t : clone.tables) {
    std::size_t a = f.agreement_count(t);
    if (arg == nullptr || a > best) {
      best = a;
      arg = &t;
    }
  }
  return {*arg, Rational(BigInt(static_cast<std::uint64_t>(best)),
                         BigInt(static_cast<std::uint64_t>(f.size())))};
}

namespace detail {

/// Enumerates every k-ary function in lexicographic entry order and takes
/// the max over f of min over the clone of D(f, t). The inner min stops
/// as soon as it cannot raise the running max. Returns the radius and the
/// lexicographically least function attaining it.
inline std::pair<std::size_t, FunctionTable> covering_radius_scan(const CloneSet& clone,
                                                                  std::uint64_t total) {
  int n = clone.n;
  std::size_t len = pow_size(n, clone.arity);
  FunctionTable cur(n, clone.arity);
  FunctionTable witness = cur;
  std::vector<Elem> e(len, 0);
  std::size_t radius = 0;

  // packed fast path
  std::vector<std::uint64_t> keys;
  bool packed = clone.tables[0].packed_key().has_value();
  int bits = clone.tables[0].entry_bits();
  std::uint64_t lane = 0;
  if (packed) {
    for (const auto& t : clone.tables) keys.push_back(*t.packed_key());
    for (std::size_t f = 0; f < len; ++f) lane |= std::uint64_t(1) << (f * static_cast<std::size_t>(bits));
  }

  for (std::uint64_t it = 0; it < total; ++it) {
    std::size_t dist = len;
    if (packed) {
      std::uint64_t ck = *cur.packed_key();
      for (std::uint64_t key : keys) {
        std::uint64_t diff = ck ^ key;
        std::uint64_t fold = diff;
        for (int b = 1; b < bits; ++b) fold |= diff >> b;
        std::size_t d = static_cast<std::size_t>(std::popcount(fold & lane));
        if (d < dist) {
          dist = d;
          if (dist <= radius) break;
        }
      }
    } else {
      for (const auto& t : clone.tables) {
        std::size_t d = cur.hamming_distance(t);
        if (d < dist) {
          dist = d;
          if (dist <= radius) break;
        }
      }
    }
    if (dist > radius) {
      radius = dist;
      witness = cur;
    }
    for (std::size_t pos = len; pos-- > 0;) {
      if (static_cast<int>(e[pos]) + 1 < n) {
        ++e[pos];
        cur.set(pos, e[pos]);
        break;
      }
      e[pos] = 0;
      cur.set(pos, 0);
    }
  }
  return {radius, witness};
}

}  // namespace detail

/// max over all k-ary f of min over the clone of D(f, t): the covering
/// radius of Clo_k viewed as a code over the alphabet A.
inline std::size_t covering_radius(const CloneSet& clone,
                                   std::uint64_t budget = kDefaultFunctionBudget) {
  if (clone.tables.empty()) throw DomainError("covering_radius: empty clone");
  auto total = detail::function_space_size(clone.n, clone.arity);
  if (!total || *total > budget)
    throw BudgetError(
        "covering_radius: function space exceeds budget (no exhaustive route; the "
        "Walsh-Hadamard route applies only to the Boolean affine clone)");
  return detail::covering_radius_scan(clone, *total).first;
}

/// Nonlinearity of a Boolean function: Hamming distance to the affine
/// clone, via the fast Walsh-Hadamard transform of the +-1 representation.
inline std::size_t walsh_nonlinearity(const FunctionTable& f) {
  if (f.universe() != 2) throw DomainError("walsh_nonlinearity: universe must be {0,1}");
  if (f.arity() < 1) throw DomainError("walsh_nonlinearity: arity must be >= 1");
  std::size_t len = f.size();
  std::vector<long long> w(len);
  for (std::size_t i = 0; i < len; ++i) w[i] = f.get(i) ? -1 : 1;
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        long long a = w[j], b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
    }
  }
  long long maxabs = 0;
  for (long long v : w) maxabs = std::max(maxabs, std::llabs(v));
  return len / 2 - static_cast<std::size_t>(maxabs) / 2;
}

enum class PrimMethod { Exhaustive, WalshHadamard };

/// Prim_k(A) = 1 - coveringRadius / n^k, with the least hardest function
/// as witness. Prim(A) itself is only ever reported as a min over the
/// computed arities, labeled an upper bound.
struct PrimReport {
  std::string algebra;
  int arity = 0;
  Rational prim_k;
  std::size_t covering_radius = 0;
  FunctionTable hardest;
  PrimMethod method = PrimMethod::Exhaustive;
  bool complete = false;

  PrimReport() : hardest(1, 0) {}
};

namespace detail {

/// Is this complete clone exactly the Boolean affine clone at its arity?
inline bool is_boolean_affine_clone(const CloneSet& clone) {
  if (clone.n != 2 || !clone.complete) return false;
  std::size_t expected = std::size_t(1) << (clone.arity + 1);
  if (clone.tables.size() != expected) return false;
  for (const auto& t : clone.tables)
    if (!post_classes(t).affine) return false;
  return true;
}

}  // namespace detail

inline PrimReport prim_at(const FiniteAlgebra& alg, int k,
                          std::uint64_t clone_budget = kDefaultCloneBudget,
                          std::uint64_t func_budget = kDefaultFunctionBudget) {
  if (k < 1) throw DomainError("prim_at: arity must be >= 1");
  CloneSet clone = generate_clone(alg, k, clone_budget);
  if (!clone.complete) throw BudgetError("prim_at: clone generation exceeded budget");
  auto total = detail::function_space_size(alg.size(), k);
  if (!total || *total > func_budget)
    throw BudgetError(
        "prim_at: function enumeration exceeds budget and no Walsh-Hadamard route "
        "applies (that route needs n = 2 with the affine clone)");

  PrimReport rep;
  rep.algebra = alg.name();
  rep.arity = k;
  if (detail::is_boolean_affine_clone(clone)) {
    // covering radius of the first-order Reed-Muller code via per-function WHT
    rep.method = PrimMethod::WalshHadamard;
    std::size_t len = pow_size(2, k);
    FunctionTable cur(2, k);
    FunctionTable witness = cur;
    std::vector<Elem> e(len, 0);
    std::size_t radius = 0;
    for (std::uint64_t it = 0; it < *total; ++it) {
      std::size_t nl = walsh_nonlinearity(cur);
      if (nl > radius) {
        radius = nl;
        witness = cur;
      }
      for (std::size_t pos = len; pos-- > 0;) {
        if (e[pos] == 0) {
          e[pos] = 1;
          cur.set(pos, 1);
          break;
        }
        e[pos] = 0;
        cur.set(pos, 0);
      }
    }
    rep.covering_radius = radius;
    rep.hardest = witness;
  } else {
    rep.method = PrimMethod::Exhaustive;
    auto [radius, witness] = detail::covering_radius_scan(clone, *total);
    rep.covering_radius = radius;
    rep.hardest = witness;
  }
  std::size_t len = pow_size(alg.size(), k);
  rep.prim_k = Rational(1) - Rational(BigInt(static_cast<std::uint64_t>(rep.covering_radius)),
                                      BigInt(static_cast<std::uint64_t>(len)));
  rep.complete = true;
  return rep;
}

/// Exhaustive-route variant, for cross-checking the WHT path.
inline PrimReport prim_at_exhaustive(const FiniteAlgebra& alg, int k,
                                     std::uint64_t clone_budget = kDefaultCloneBudget,
                                     std::uint64_t func_budget = kDefaultFunctionBudget) {
  CloneSet clone = generate_clone(alg, k, clone_budget);
  if (!clone.complete) throw BudgetError("prim_at: clone generation exceeded budget");
  auto total = detail::function_space_size(alg.size(), k);
  if (!total || *total > func_budget) throw BudgetError("prim_at: function enumeration exceeds budget");
  PrimReport rep;
  rep.algebra = alg.name();
  rep.arity = k;
  rep.method = PrimMethod::Exhaustive;
  auto [radius, witness] = detail::covering_radius_scan(clone, *total);
  rep.covering_radius = radius;
  rep.hardest = witness;
  std::size_t len = pow_size(alg.size(), k);
  rep.prim_k = Rational(1) - Rational(BigInt(static_cast<std::uint64_t>(radius)),
                                      BigInt(static_cast<std::uint64_t>(len)));
  rep.complete = true;
  return rep;
}

}  // namespace ualab
