#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ualab/term.hpp"

namespace ualab {

// ---------------------------------------------------------------------------
// Builtin algebras. Element orderings are frozen so every witness and
// report is reproducible byte-for-byte:
//   boolean2 / lattice2 / c2 / groupoid2: {0, 1} as themselves.
//   zn / zp / znplus / znrho: residues 0..n-1.
//   s3: 1, r, r^2, s, rs, r^2s  ->  0..5  (r the 3-cycle, s a reflection).
//   v4: e, a, b, ab  ->  0..3 (bitwise xor on two bits).
//   m_n: bottom -> 0, top -> 1, atoms a_i -> i + 2.
//   pentagon: 0, a, b, c, 1 -> 0..4 with 0 < a < b < 1 and 0 < c < 1.
//   fl2: 0, x^y, x, y, xvy, 1 -> 0..5.
//   pn: {0..n-1} with x*y = x.
// ---------------------------------------------------------------------------

namespace detail {

inline FunctionTable unary_table(int n, const std::vector<Elem>& vals) {
  FunctionTable t(n, 1);
  for (int i = 0; i < n; ++i) t.set(static_cast<std::size_t>(i), vals[static_cast<std::size_t>(i)]);
  return t;
}

template <class F>
inline FunctionTable binary_table(int n, F f) {
  FunctionTable t(n, 2);
  for (Elem a = 0; a < static_cast<Elem>(n); ++a)
    for (Elem b = 0; b < static_cast<Elem>(n); ++b)
      t.set(static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + b, f(a, b));
  return t;
}

inline FunctionTable nullary_table(int n, Elem v) {
  FunctionTable t(n, 0);
  t.set(0, v);
  return t;
}

/// Builds a bounded-lattice algebra from a "less or equal" predicate on
/// 0..n-1 (a partial order where meets and joins exist).
template <class Le>
inline FiniteAlgebra lattice_from_order(const std::string& name, int n, Le le, bool constants) {
  auto join = [&](Elem a, Elem b) -> Elem {
    for (Elem c = 0; c < static_cast<Elem>(n); ++c) {
      if (!le(a, c) || !le(b, c)) continue;
      bool least = true;
      for (Elem d = 0; d < static_cast<Elem>(n); ++d)
        if (le(a, d) && le(b, d) && !le(c, d)) {
          least = false;
          break;
        }
      if (least) return c;
    }
    throw DomainError(name + ": join does not exist");
  };
  auto meet = [&](Elem a, Elem b) -> Elem {
    for (Elem c = 0; c < static_cast<Elem>(n); ++c) {
      if (!le(c, a) || !le(c, b)) continue;
      bool greatest = true;
      for (Elem d = 0; d < static_cast<Elem>(n); ++d)
        if (le(d, a) && le(d, b) && !le(d, c)) {
          greatest = false;
          break;
        }
      if (greatest) return c;
    }
    throw DomainError(name + ": meet does not exist");
  };
  FiniteAlgebra alg(name, n);
  alg.add_op("join", binary_table(n, join));
  alg.add_op("meet", binary_table(n, meet));
  if (constants) {
    Elem bot = 0, top = 0;
    for (Elem x = 0; x < static_cast<Elem>(n); ++x) {
      if (le(x, bot)) bot = x;
      if (le(top, x)) top = x;
    }
    alg.add_op("zero", nullary_table(n, bot));
    alg.add_op("one", nullary_table(n, top));
  }
  return alg;
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

/// The two-element Boolean algebra ({0,1}, zero, one, neg, join, meet).
inline FiniteAlgebra make_boolean2() {
  FiniteAlgebra alg("boolean2", 2);
  alg.add_op("zero", detail::nullary_table(2, 0));
  alg.add_op("one", detail::nullary_table(2, 1));
  alg.add_op("neg", detail::unary_table(2, {1, 0}));
  alg.add_op("join", detail::binary_table(2, [](Elem a, Elem b) { return a | b; }));
  alg.add_op("meet", detail::binary_table(2, [](Elem a, Elem b) { return a & b; }));
  return alg;
}

/// The two-element lattice reduct (join, meet only).
inline FiniteAlgebra make_lattice2() {
  FiniteAlgebra alg("lattice2", 2);
  alg.add_op("join", detail::binary_table(2, [](Elem a, Elem b) { return a | b; }));
  alg.add_op("meet", detail::binary_table(2, [](Elem a, Elem b) { return a & b; }));
  return alg;
}

/// The two-element bounded lattice (join, meet, zero, one) — no negation.
inline FiniteAlgebra make_lattice01() {
  FiniteAlgebra alg("lattice01", 2);
  alg.add_op("join", detail::binary_table(2, [](Elem a, Elem b) { return a | b; }));
  alg.add_op("meet", detail::binary_table(2, [](Elem a, Elem b) { return a & b; }));
  alg.add_op("zero", detail::nullary_table(2, 0));
  alg.add_op("one", detail::nullary_table(2, 1));
  return alg;
}

/// The meet-semilattice C2 = ({0,1}, mul) with x*y = min(x,y).
inline FiniteAlgebra make_c2() {
  FiniteAlgebra alg("c2", 2);
  alg.add_op("mul", detail::binary_table(2, [](Elem a, Elem b) { return a & b; }));
  return alg;
}

/// The cyclic group Z_n as (add, inv, e).
inline FiniteAlgebra make_zn(int n, std::string name = "") {
  if (n < 2) throw DomainError("zn: order must be >= 2");
  if (name.empty()) name = "zn" + std::to_string(n);
  FiniteAlgebra alg(name, n);
  alg.add_op("add", detail::binary_table(n, [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); }));
  std::vector<Elem> inv(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) inv[static_cast<std::size_t>(x)] = static_cast<Elem>((n - x) % n);
  alg.add_op("inv", detail::unary_table(n, inv));
  alg.add_op("e", detail::nullary_table(n, 0));
  return alg;
}

/// Z_p for prime p (the primality of the order is part of the contract).
inline FiniteAlgebra make_zp(int p) {
  if (!detail::is_prime(p)) throw DomainError("zp: order must be prime");
  return make_zn(p, "zp" + std::to_string(p));
}

/// Z_n enriched with every nullary function; its clone is the affine clone.
inline FiniteAlgebra make_znplus(int n) {
  FiniteAlgebra alg = make_zn(n, "z" + std::to_string(n) + "plus");
  for (int c = 1; c < n; ++c)  // e is already the constant 0
    alg.add_op("c" + std::to_string(c), detail::nullary_table(n, static_cast<Elem>(c)));
  return alg;
}

/// (Z_n, add) enriched with the cyclic permutation rho(x) = x + 1.
inline FiniteAlgebra make_znrho(int n) {
  if (n < 2) throw DomainError("znrho: order must be >= 2");
  FiniteAlgebra alg("z" + std::to_string(n) + "rho", n);
  alg.add_op("add", detail::binary_table(n, [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); }));
  std::vector<Elem> rho(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) rho[static_cast<std::size_t>(x)] = static_cast<Elem>((x + 1) % n);
  alg.add_op("rho", detail::unary_table(n, rho));
  return alg;
}

/// The symmetric group S3 with elements 1, r, r^2, s, rs, r^2s (0..5),
/// where r = (0 1 2) and s swaps two points. Ops (mul, inv, e).
inline FiniteAlgebra make_s3() {
  // permutation realization on {0,1,2}: element i -> permutation perm[i]
  const std::vector<std::vector<Elem>> perm = {
      {0, 1, 2},  // 1
      {1, 2, 0},  // r
      {2, 0, 1},  // r^2
      {0, 2, 1},  // s
      {1, 0, 2},  // rs  (first r, then s)
      {2, 1, 0},  // r^2 s
  };
  auto compose_perm = [&](int a, int b) {
    // product a*b acts as "apply b, then a"
    std::vector<Elem> c(3);
    for (int x = 0; x < 3; ++x) c[static_cast<std::size_t>(x)] = perm[static_cast<std::size_t>(a)][perm[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)]];
    for (int i = 0; i < 6; ++i)
      if (perm[static_cast<std::size_t>(i)] == c) return static_cast<Elem>(i);
    throw DomainError("s3: composition left the element list");
  };
  FiniteAlgebra alg("s3", 6);
  alg.add_op("mul", detail::binary_table(6, [&](Elem a, Elem b) { return compose_perm(static_cast<int>(a), static_cast<int>(b)); }));
  std::vector<Elem> inv(6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (compose_perm(a, b) == 0) inv[static_cast<std::size_t>(a)] = static_cast<Elem>(b);
  alg.add_op("inv", detail::unary_table(6, inv));
  alg.add_op("e", detail::nullary_table(6, 0));
  return alg;
}

/// The Klein four-group (xor on two bits), ops (mul, inv, e).
inline FiniteAlgebra make_v4() {
  FiniteAlgebra alg("v4", 4);
  alg.add_op("mul", detail::binary_table(4, [](Elem a, Elem b) { return a ^ b; }));
  alg.add_op("inv", detail::unary_table(4, {0, 1, 2, 3}));
  alg.add_op("e", detail::nullary_table(4, 0));
  return alg;
}

/// The height-2 modular lattice M_n: bottom 0, top 1, atoms 2..n+1.
inline FiniteAlgebra make_mn(int n) {
  if (n < 2) throw DomainError("m_n: needs at least 2 atoms");
  int size = n + 2;
  auto le = [](Elem a, Elem b) { return a == b || a == 0 || b == 1; };
  return detail::lattice_from_order("m" + std::to_string(n), size, le, /*constants=*/false);
}

/// The pentagon N5: 0 < a < b < 1 and 0 < c < 1, elements 0,a,b,c,1 -> 0..4.
/// Bounded: zero and one are nullary ops.
inline FiniteAlgebra make_pentagon() {
  auto le = [](Elem a, Elem b) {
    if (a == b || a == 0 || b == 4) return true;
    return a == 1 && b == 2;  // a < b
  };
  return detail::lattice_from_order("pentagon", 5, le, /*constants=*/true);
}

/// The bounded free distributive lattice on two generators:
/// 0 < x^y < {x, y} < xvy < 1, elements 0, x^y, x, y, xvy, 1 -> 0..5.
inline FiniteAlgebra make_fl2() {
  auto le = [](Elem a, Elem b) {
    if (a == b || a == 0 || b == 5) return true;
    if (a == 1) return b == 2 || b == 3 || b == 4;
    if (b == 4) return a == 2 || a == 3;
    return false;
  };
  return detail::lattice_from_order("fl2", 6, le, /*constants=*/true);
}

/// The projection groupoid P_n: x * y = x on {0..n-1}.
inline FiniteAlgebra make_pn(int n) {
  if (n < 1) throw DomainError("pn: order must be >= 1");
  FiniteAlgebra alg("p" + std::to_string(n), n);
  alg.add_op("mul", detail::binary_table(n, [](Elem a, Elem) { return a; }));
  return alg;
}

/// One of the 16 order-two groupoids, indexed in row-major truth-table
/// order: index = 8 f(0,0) + 4 f(0,1) + 2 f(1,0) + f(1,1).
inline FiniteAlgebra make_groupoid2(int index) {
  if (index < 0 || index > 15) throw DomainError("groupoid2: index must be 0..15");
  FiniteAlgebra alg("g" + std::to_string(index), 2);
  FunctionTable t(2, 2);
  t.set(0, static_cast<Elem>((index >> 3) & 1));
  t.set(1, static_cast<Elem>((index >> 2) & 1));
  t.set(2, static_cast<Elem>((index >> 1) & 1));
  t.set(3, static_cast<Elem>(index & 1));
  alg.add_op("mul", t);
  return alg;
}

/// ({0,1}, join, xor): unary clone {id, 0}; a barrier-theorem sample.
inline FiniteAlgebra make_or_xor() {
  FiniteAlgebra alg("or_xor", 2);
  alg.add_op("join", detail::binary_table(2, [](Elem a, Elem b) { return a | b; }));
  alg.add_op("xor", detail::binary_table(2, [](Elem a, Elem b) { return a ^ b; }));
  return alg;
}

/// ({0,1}, meet, xnor).
inline FiniteAlgebra make_and_xnor() {
  FiniteAlgebra alg("and_xnor", 2);
  alg.add_op("meet", detail::binary_table(2, [](Elem a, Elem b) { return a & b; }));
  alg.add_op("xnor", detail::binary_table(2, [](Elem a, Elem b) { return static_cast<Elem>(1 ^ a ^ b); }));
  return alg;
}

/// ({0,1}, neg, xor3) with xor3(x,y,z) = x + y + z mod 2.
inline FiniteAlgebra make_neg_xor3() {
  FiniteAlgebra alg("neg_xor3", 2);
  alg.add_op("neg", detail::unary_table(2, {1, 0}));
  FunctionTable t(2, 3);
  for (std::size_t i = 0; i < 8; ++i) t.set(i, static_cast<Elem>(std::popcount(i) & 1));
  alg.add_op("xor3", t);
  return alg;
}

/// Resolves "name" or "name:param" builtin keys (the part after a CLI
/// "builtin:" prefix).
inline FiniteAlgebra builtin_algebra(const std::string& key) {
  std::string name = key;
  int param = -1;
  auto colon = key.find(':');
  if (colon != std::string::npos) {
    name = key.substr(0, colon);
    try {
      param = std::stoi(key.substr(colon + 1));
    } catch (const std::exception&) {
      throw DomainError("builtin parameter must be an integer: " + key);
    }
  }
  auto need = [&](const char* what) {
    if (param < 0) throw DomainError(std::string("builtin ") + name + " needs a parameter: " + what);
    return param;
  };
  if (name == "boolean2") return make_boolean2();
  if (name == "lattice2") return make_lattice2();
  if (name == "lattice01") return make_lattice01();
  if (name == "c2") return make_c2();
  if (name == "zn") return make_zn(need("order"));
  if (name == "zp") return make_zp(need("prime order"));
  if (name == "znplus") return make_znplus(need("order"));
  if (name == "z2plus") return make_znplus(2);
  if (name == "z3plus") return make_znplus(3);
  if (name == "znrho") return make_znrho(need("order"));
  if (name == "s3") return make_s3();
  if (name == "v4") return make_v4();
  if (name == "m_n") return make_mn(need("atom count"));
  if (name == "pentagon") return make_pentagon();
  if (name == "fl2") return make_fl2();
  if (name == "pn") return make_pn(need("order"));
  if (name == "groupoid2") return make_groupoid2(need("index 0..15"));
  if (name == "nand") return make_groupoid2(14);
  if (name == "nor") return make_groupoid2(8);
  if (name == "or_xor") return make_or_xor();
  if (name == "and_xnor") return make_and_xnor();
  if (name == "neg_xor3") return make_neg_xor3();
  throw DomainError("unknown builtin algebra: " + key);
}

/// Spectrum classification of the 16 order-two groupoids. "unknown" marks
/// the implication class, whose full spectrum is an open problem.
inline std::string groupoid2_class(int index) {
  switch (index) {
    case 0:
    case 15:
      return "constant";
    case 3:
    case 5:
      return "projection";
    case 6:
    case 9:
      return "xor";
    case 1:
    case 7:
      return "and-or";
    case 10:
    case 12:
      return "negation";
    case 8:
    case 14:
      return "dyadic";
    case 2:
    case 4:
    case 11:
    case 13:
      return "unknown";
    default:
      throw DomainError("groupoid2_class: index must be 0..15");
  }
}

// ---------------------------------------------------------------------------
// Closed-form oracles.
// ---------------------------------------------------------------------------

/// phi(p, q, r) = 1 - (2^p + 2^q - 2) / 2^(p+q+r): the probability of
/// x_1...x_r y_1...y_p = x_1...x_r z_1...z_q in the semilattice C2.
inline Rational c2_phi(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw DomainError("c2_phi: parameters must be >= 0");
  BigInt num = (BigInt(1) << p) + (BigInt(1) << q) - 2;
  BigInt den = BigInt(1) << (p + q + r);
  return Rational(1) - Rational(num, den);
}

/// Brute-force companion to c2_phi: counts assignments of the r + p + q
/// variables where min over {x, y} equals min over {x, z}, the empty
/// product evaluating to 1. Uses k = max(1, p+q+r) variables.
inline Rational c2_brute(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw DomainError("c2_brute: parameters must be >= 0");
  int total = p + q + r;
  int k = std::max(1, total);
  std::uint64_t satisfied = 0;
  std::uint64_t all = std::uint64_t(1) << k;
  for (std::uint64_t a = 0; a < all; ++a) {
    auto bit = [&](int i) { return static_cast<int>((a >> i) & 1); };
    int x = 1, y = 1, z = 1;
    for (int i = 0; i < r; ++i) x &= bit(i);
    for (int i = 0; i < p; ++i) y &= bit(r + i);
    for (int i = 0; i < q; ++i) z &= bit(r + p + i);
    if ((x & y) == (x & z)) ++satisfied;
  }
  return Rational(BigInt(satisfied), BigInt(all));
}

/// Pr(x_1^2 ... x_k^2 = 1 | S3) = (1/3)(1 + 1/2^(k-1)).
inline Rational s3_power_prob(int k) {
  if (k < 1) throw DomainError("s3_power_prob: k must be >= 1");
  return Rational(1, 3) * (Rational(1) + Rational(BigInt(1), BigInt(1) << (k - 1)));
}

/// Brute-force companion over 6^k tuples of S3.
inline Rational s3_brute(int k) {
  if (k < 1) throw DomainError("s3_brute: k must be >= 1");
  FiniteAlgebra s3 = make_s3();
  const FunctionTable& mul = s3.table(*s3.op_index("mul"));
  auto prod = [&](Elem a, Elem b) { return mul(std::initializer_list<Elem>{a, b}); };
  std::size_t total = pow_size(6, k);
  std::size_t hits = 0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<Elem> tuple = index_tuple(idx, k, 6);
    Elem acc = 0;
    for (Elem x : tuple) acc = prod(acc, prod(x, x));
    if (acc == 0) ++hits;
  }
  return Rational(BigInt(static_cast<std::uint64_t>(hits)), BigInt(static_cast<std::uint64_t>(total)));
}

enum class BoundKind { Zp, MnOrbits, AffinePrim, Quadrilateral, IdemprimalLower, RhoLower };

/// Closed-form bound values, each a distinct shape:
///   zp(p): the spectrum {1/p, 1}.
inline std::vector<Rational> zp_spectrum(int p) {
  if (!detail::is_prime(p)) throw DomainError("zp_spectrum: order must be prime");
  return {Rational(1, p), Rational(1)};
}

///   mn_orbits(n): orbit sizes of M_n^2 under Aut(M_n) = Sym(atoms):
///   (1,1,1,1,n,n,n,n,n,n^2-n), summing to (n+2)^2.
inline std::vector<std::size_t> mn_orbit_sizes(int n) {
  if (n < 2) throw DomainError("mn_orbit_sizes: n must be >= 2");
  std::vector<std::size_t> s(4, 1);
  s.insert(s.end(), 5, static_cast<std::size_t>(n));
  s.push_back(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
  return s;
}

///   affine_prim(k): Prim_k(Z_2^+) = 1/2 + 1/2^(k/2+1) for even k.
inline Rational affine_prim(int k) {
  if (k < 2 || k % 2 != 0) throw DomainError("affine_prim: exact value known for even k >= 2 only");
  return Rational(1, 2) + Rational(BigInt(1), BigInt(1) << (k / 2 + 1));
}

///   quadrilateral(prim): the spectrum-size lower bound floor(1/(4(1-prim)))
///   for prim < 1.
inline BigInt quadrilateral_bound(const Rational& prim) {
  Rational gap = Rational(1) - prim;
  if (!(gap > Rational(0))) throw DomainError("quadrilateral_bound: needs prim < 1");
  Rational inv = Rational(1) / (Rational(4) * gap);
  return inv.num() / inv.den();  // floor for non-negative values
}

///   idemprimal_lower(n, k): Prim_k >= 1 - 1/n^(k-1) for idemprimal-at-k.
inline Rational idemprimal_lower(int n, int k) {
  if (n < 2 || k < 1) throw DomainError("idemprimal_lower: need n >= 2, k >= 1");
  return Rational(1) - Rational(BigInt(1), BigInt(pow_size(n, k - 1)));
}

///   rho_lower(n): Prim_k >= 1/n after adjoining a cyclic permutation.
inline Rational rho_lower(int n) {
  if (n < 2) throw DomainError("rho_lower: n must be >= 2");
  return Rational(1, n);
}

// ---------------------------------------------------------------------------
// Recorded discrepancies between our exhaustive computations and the
// source text. The computations are asserted; the quoted values are logged.
// ---------------------------------------------------------------------------

struct Discrepancy {
  std::string id;
  std::string computed;
  std::string quoted;
  std::string note;
};

inline std::vector<Discrepancy> known_discrepancies() {
  return {
      {"pentagon-meet-zero", "13/25", "14/25",
       "Pr(x^y = 0 | N5): exhaustive count over the 25 pairs gives 13 "
       "(9 pairs involving 0, plus (a,c),(c,a),(b,c),(c,b)); off-diagonal "
       "solutions come in symmetric pairs and no diagonal pair except (0,0) "
       "meets to 0, so the count cannot be even-plus-odd as 14 requires."},
      {"fl2-meet-zero", "11/36", "13/36",
       "Pr(x^y = 0 | FL(2)): in the bounded free distributive lattice on "
       "two generators only pairs involving 0 meet to 0, giving 11. The "
       "6-element lattices realizing 13/36 are reported by lattice-search."},
  };
}

// ---------------------------------------------------------------------------
// Seeded corpus helpers.
// ---------------------------------------------------------------------------

/// A uniformly random order-3 groupoid (one binary operation).
inline FiniteAlgebra random_groupoid3(std::mt19937& rng, const std::string& name) {
  std::uniform_int_distribution<int> pick(0, 2);
  FiniteAlgebra alg(name, 3);
  FunctionTable t(3, 2);
  for (std::size_t i = 0; i < 9; ++i) t.set(i, static_cast<Elem>(pick(rng)));
  alg.add_op("mul", t);
  return alg;
}

/// A random order-3 groupoid enriched with the 3-cycle rho(x) = x + 1 mod 3.
inline FiniteAlgebra random_groupoid3_rho(std::mt19937& rng, const std::string& name) {
  FiniteAlgebra alg = random_groupoid3(rng, name);
  alg.add_op("rho", detail::unary_table(3, {1, 2, 0}));
  return alg;
}

namespace detail {

inline Term random_term(std::mt19937& rng, const FiniteAlgebra& alg, int vars, int depth) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> var_pick(0, vars - 1);
  if (depth == 0 || coin(rng) == 0) return Term::variable(var_pick(rng));
  std::uniform_int_distribution<std::size_t> op_pick(0, alg.op_count() - 1);
  std::size_t op = op_pick(rng);
  int arity = alg.symbol(op).arity;
  std::vector<Term> args;
  args.reserve(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) args.push_back(random_term(rng, alg, vars, depth - 1));
  return Term::apply(alg.symbol(op).name, std::move(args));
}

}  // namespace detail

/// A random equation over the algebra's signature with exactly k declared
/// variables (indices drawn from 0..k-1; unused ones act as dummies).
inline Equation random_equation(std::mt19937& rng, const FiniteAlgebra& alg, int vars, int depth) {
  if (vars < 1) throw DomainError("random_equation: vars must be >= 1");
  Term l = detail::random_term(rng, alg, vars, depth);
  Term r = detail::random_term(rng, alg, vars, depth);
  return Equation(std::move(l), std::move(r), vars);
}

}  // namespace ualab
