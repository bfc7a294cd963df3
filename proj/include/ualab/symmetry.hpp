#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "ualab/algebra.hpp"
#include "ualab/rational.hpp"

namespace ualab {

/// Full listing of Aut(A) (not generators; universes here are tiny) plus
/// the subalgebra of fixed points.
struct AutomorphismGroup {
  int n = 0;
  std::vector<std::vector<Elem>> elements;
  std::vector<Elem> fixed_points;

  std::size_t order() const { return elements.size(); }
};

namespace detail {

inline bool is_automorphism(const FiniteAlgebra& alg, const std::vector<Elem>& phi) {
  int n = alg.size();
  std::vector<Elem> tuple;
  for (std::size_t op = 0; op < alg.op_count(); ++op) {
    const FunctionTable& f = alg.table(op);
    int m = f.arity();
    std::size_t len = f.size();
    for (std::size_t i = 0; i < len; ++i) {
      // phi(f(x)) == f(phi x), with phi applied componentwise to the tuple
      tuple = index_tuple(i, m, n);
      for (auto& x : tuple) x = phi[x];
      if (phi[f.get(i)] != f.get(tuple_index(std::span<const Elem>(tuple), n))) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Exhaustive n! filter by the homomorphism condition. Verifies the group
/// axioms on the surviving set. Guarded: refuses universes above 9 elements.
inline AutomorphismGroup automorphism_group(const FiniteAlgebra& alg) {
  int n = alg.size();
  if (n > 9) throw BudgetError("automorphism search: universe too large for n! enumeration");
  AutomorphismGroup g;
  g.n = n;
  std::vector<Elem> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    if (detail::is_automorphism(alg, perm)) g.elements.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // group axiom check: closure under composition (inverses follow in a finite group)
  std::set<std::vector<Elem>> members(g.elements.begin(), g.elements.end());
  for (const auto& a : g.elements) {
    for (const auto& b : g.elements) {
      std::vector<Elem> c(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) c[static_cast<std::size_t>(x)] = a[b[static_cast<std::size_t>(x)]];
      if (!members.count(c)) throw DomainError("automorphism set not closed under composition");
    }
  }

  for (Elem x = 0; x < static_cast<Elem>(n); ++x) {
    bool fixed = true;
    for (const auto& phi : g.elements)
      if (phi[x] != x) {
        fixed = false;
        break;
      }
    if (fixed) g.fixed_points.push_back(x);
  }
  return g;
}

struct Orbit {
  std::size_t representative;  // least tuple_index in the orbit
  std::size_t size;
};

/// Orbits of the componentwise action of Aut(A) on A^k.
struct OrbitPartition {
  int arity = 0;
  std::size_t total = 0;
  std::vector<Orbit> orbits;            // ordered by representative
  std::vector<std::uint32_t> orbit_of;  // tuple index -> orbit position

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    s.reserve(orbits.size());
    for (const auto& o : orbits) s.push_back(o.size);
    return s;
  }
};

inline OrbitPartition orbit_partition(const AutomorphismGroup& g, int k,
                                      std::uint64_t budget = std::uint64_t(1) << 24) {
  std::size_t total = pow_size(g.n, k);
  if (total > budget) throw BudgetError("orbit enumeration: n^k exceeds budget");
  OrbitPartition part;
  part.arity = k;
  part.total = total;
  part.orbit_of.assign(total, 0);
  std::vector<bool> seen(total, false);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    std::uint32_t id = static_cast<std::uint32_t>(part.orbits.size());
    std::size_t size = 0;
    seen[start] = true;
    stack.assign(1, start);
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      part.orbit_of[cur] = id;
      ++size;
      std::vector<Elem> tuple = index_tuple(cur, k, g.n);
      std::vector<Elem> mapped(tuple.size());
      for (const auto& phi : g.elements) {
        for (std::size_t i = 0; i < tuple.size(); ++i) mapped[i] = phi[tuple[i]];
        std::size_t next = tuple_index(std::span<const Elem>(mapped), g.n);
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
      }
    }
    part.orbits.push_back({start, size});
  }
  return part;
}

/// All subset sums of `sizes`, as reduced fractions over `denominator`,
/// sorted ascending. Uses a reachability bit vector over 0..denominator,
/// so the cost is O(|sizes| * denominator / 64) rather than 2^|sizes|.
inline std::vector<Rational> sigma_subset_sums(const std::vector<std::size_t>& sizes,
                                               std::size_t denominator) {
  std::size_t sum = 0;
  for (std::size_t s : sizes) sum += s;
  if (sum != denominator) throw DomainError("sigma_subset_sums: sizes do not sum to denominator");

  std::size_t nbits = denominator + 1;
  std::vector<std::uint64_t> reach((nbits + 63) / 64, 0);
  reach[0] = 1;
  for (std::size_t s : sizes) {
    if (s == 0) continue;
    // reach |= reach << s
    std::size_t wshift = s / 64;
    int bshift = static_cast<int>(s % 64);
    for (std::size_t w = reach.size(); w-- > 0;) {
      std::uint64_t v = 0;
      if (w >= wshift) {
        v = reach[w - wshift] << bshift;
        if (bshift != 0 && w > wshift) v |= reach[w - wshift - 1] >> (64 - bshift);
      }
      reach[w] |= v;
    }
  }
  std::vector<Rational> out;
  for (std::size_t s = 0; s < nbits; ++s)
    if ((reach[s / 64] >> (s % 64)) & 1)
      out.emplace_back(BigInt(static_cast<std::uint64_t>(s)), BigInt(static_cast<std::uint64_t>(denominator)));
  return out;
}

/// The arity-k slice of the orbit bound on the spectrum:
/// (1/n^k) * subset sums of the orbit sizes of A^k under Aut(A).
inline std::vector<Rational> orbit_bound_at(const FiniteAlgebra& alg, int k,
                                            std::uint64_t budget = std::uint64_t(1) << 24) {
  AutomorphismGroup g = automorphism_group(alg);
  OrbitPartition part = orbit_partition(g, k, budget);
  return sigma_subset_sums(part.sizes(), part.total);
}

inline std::vector<Rational> orbit_bound_at(const AutomorphismGroup& g, int k,
                                            std::uint64_t budget = std::uint64_t(1) << 24) {
  OrbitPartition part = orbit_partition(g, k, budget);
  return sigma_subset_sums(part.sizes(), part.total);
}

}  // namespace ualab
