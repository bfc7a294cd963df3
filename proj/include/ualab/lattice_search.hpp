#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ualab/builtins.hpp"
#include "ualab/spectrum.hpp"

namespace ualab {

/// One 6-element bounded lattice, up to isomorphism, with the probability
/// of x ^ y = 0 over its 36 pairs.
struct LatticeCandidate {
  FiniteAlgebra algebra;
  Rational meet_zero_prob;
  std::uint64_t canonical_key = 0;  // 36-bit canonical order relation
};

namespace detail {

using LeMatrix = std::array<std::array<bool, 6>, 6>;

inline std::uint64_t le_key(const LeMatrix& le) {
  std::uint64_t k = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) k = (k << 1) | (le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ? 1u : 0u);
  return k;
}

/// Least relation key over all relabelings of the four middle elements
/// (bottom and top are order-determined, so they stay fixed).
inline std::uint64_t canonical_le_key(const LeMatrix& le) {
  std::array<int, 4> mid = {1, 2, 3, 4};
  std::uint64_t best = ~std::uint64_t(0);
  do {
    std::array<int, 6> relab = {0, mid[0], mid[1], mid[2], mid[3], 5};
    LeMatrix m{};
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        m[static_cast<std::size_t>(relab[static_cast<std::size_t>(a)])]
         [static_cast<std::size_t>(relab[static_cast<std::size_t>(b)])] =
            le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    best = std::min(best, le_key(m));
  } while (std::next_permutation(mid.begin(), mid.end()));
  return best;
}

inline bool is_transitive(const LeMatrix& le) {
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      if (!le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
      for (int c = 0; c < 6; ++c)
        if (le[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] &&
            !le[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)])
          return false;
    }
  return true;
}

/// Do all pairwise meets and joins exist (unique greatest lower / least
/// upper bounds)?
inline bool is_lattice(const LeMatrix& le) {
  auto leq = [&](int a, int b) { return le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b) {
      bool has_meet = false, has_join = false;
      for (int c = 0; c < 6 && !(has_meet && has_join); ++c) {
        if (!has_meet && leq(c, a) && leq(c, b)) {
          bool greatest = true;
          for (int d = 0; d < 6; ++d)
            if (leq(d, a) && leq(d, b) && !leq(d, c)) {
              greatest = false;
              break;
            }
          has_meet = greatest;
        }
        if (!has_join && leq(a, c) && leq(b, c)) {
          bool least = true;
          for (int d = 0; d < 6; ++d)
            if (leq(a, d) && leq(b, d) && !leq(c, d)) {
              least = false;
              break;
            }
          has_join = least;
        }
      }
      if (!has_meet || !has_join) return false;
    }
  return true;
}

}  // namespace detail

/// Enumerates every bounded lattice on 6 elements up to isomorphism
/// (element 0 the bottom, 5 the top, the four middle elements related by
/// one of 3^6 comparability assignments) and records Pr(x ^ y = 0) for
/// each. The candidates come back sorted by probability, then key.
inline std::vector<LatticeCandidate> lattice_search_6() {
  std::set<std::uint64_t> seen;
  std::vector<LatticeCandidate> out;
  Equation eq(Term::apply("meet", {Term::variable(0), Term::variable(1)}),
              Term::apply("zero", {}), 2);
  for (int assign = 0; assign < 729; ++assign) {
    detail::LeMatrix le{};
    for (int a = 0; a < 6; ++a) {
      le[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = true;
      le[0][static_cast<std::size_t>(a)] = true;
      le[static_cast<std::size_t>(a)][5] = true;
    }
    int code = assign;
    bool ok = true;
    for (int i = 1; i <= 4 && ok; ++i)
      for (int j = i + 1; j <= 4 && ok; ++j) {
        int rel = code % 3;
        code /= 3;
        if (rel == 1) le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        if (rel == 2) le[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
      }
    if (!ok || !detail::is_transitive(le) || !detail::is_lattice(le)) continue;
    std::uint64_t key = detail::canonical_le_key(le);
    if (!seen.insert(key).second) continue;

    FiniteAlgebra alg = detail::lattice_from_order(
        "lattice6_" + std::to_string(out.size()), 6,
        [&le](Elem a, Elem b) { return le[a][b]; }, /*constants=*/true);
    LatticeCandidate cand{alg, equation_probability(alg, eq), key};
    out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end(), [](const LatticeCandidate& a, const LatticeCandidate& b) {
    if (a.meet_zero_prob != b.meet_zero_prob) return a.meet_zero_prob < b.meet_zero_prob;
    return a.canonical_key < b.canonical_key;
  });
  return out;
}

/// The candidates whose Pr(x ^ y = 0) equals the given target.
inline std::vector<LatticeCandidate> lattices_realizing(const std::vector<LatticeCandidate>& all,
                                                        const Rational& target) {
  std::vector<LatticeCandidate> hits;
  for (const auto& c : all)
    if (c.meet_zero_prob == target) hits.push_back(c);
  return hits;
}

}  // namespace ualab
