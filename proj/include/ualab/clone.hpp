#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ualab/symmetry.hpp"
#include "ualab/term.hpp"

namespace ualab {

constexpr std::uint64_t kDefaultCloneBudget = std::uint64_t(1) << 20;
constexpr std::uint64_t kDefaultFunctionBudget = std::uint64_t(1) << 24;

/// Clo_k(A): the arity-k term functions, generated by fixed-point closure.
/// `tables` is deduplicated and in canonical (entrywise lexicographic)
/// order, so reports are byte-identical across runs.
struct CloneSet {
  int n = 0;
  int arity = 0;
  std::vector<FunctionTable> tables;
  bool complete = false;
  int generation_rounds = 0;
  std::uint64_t budget = 0;

  bool contains_table(const FunctionTable& t) const {
    auto it = std::lower_bound(tables.begin(), tables.end(), t);
    return it != tables.end() && *it == t;
  }
};

enum class Containment { Present, Absent, AbsentIncomplete };

/// Membership under entrywise equality. A negative answer against an
/// incomplete closure is only "not found so far".
inline Containment clone_contains(const CloneSet& c, const FunctionTable& t) {
  if (t.universe() != c.n || t.arity() != c.arity)
    throw DomainError("clone_contains: universe or arity mismatch");
  if (c.contains_table(t)) return Containment::Present;
  return c.complete ? Containment::Absent : Containment::AbsentIncomplete;
}

namespace detail {

/// n^(n^k) when it fits in 64 bits.
inline std::optional<std::uint64_t> function_space_size(int n, int k) {
  std::size_t len = pow_size(n, k);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (n != 0 && total > ~std::uint64_t(0) / static_cast<std::uint64_t>(n)) return std::nullopt;
    total *= static_cast<std::uint64_t>(n);
  }
  return total;
}

/// Closure state for tables that fit one 64-bit word. Membership goes
/// through a direct-indexed bitset when the packed key space is small,
/// otherwise through a hash set.
class PackedCloneEngine {
 public:
  PackedCloneEngine(int n, int k, std::uint64_t budget)
      : n_(n), k_(k), bits_(bits_for(n)), len_(pow_size(n, k)), budget_(budget) {
    total_bits_ = len_ * static_cast<std::size_t>(bits_);
    used_mask_ = total_bits_ >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << total_bits_) - 1;
    if (total_bits_ <= 26) direct_.assign((std::size_t(1) << total_bits_) / 64 + 1, 0);
    full_space_ = function_space_size(n, k);
  }

  static bool fits(int n, int k) {
    return pow_size(n, k) * static_cast<std::size_t>(bits_for(n)) <= 64;
  }

  bool insert(std::uint64_t key) {
    if (!direct_.empty()) {
      std::uint64_t& w = direct_[key >> 6];
      std::uint64_t bit = std::uint64_t(1) << (key & 63);
      if (w & bit) return false;
      w |= bit;
    } else {
      if (!hashed_.insert(key).second) return false;
    }
    keys_.push_back(key);
    return true;
  }

  /// Runs semi-naive rounds until fixed point, budget overflow, or the
  /// full function space is reached (which is already a fixed point).
  void run(const std::vector<const FunctionTable*>& ops) {
    bool saturated = full_space_ && keys_.size() == *full_space_;
    std::size_t frontier_lo = 0;
    while (!saturated && !over_budget_) {
      std::size_t size0 = keys_.size();
      if (frontier_lo == size0) break;  // empty frontier: fixed point
      ++rounds_;
      for (const FunctionTable* op : ops) {
        apply_op(*op, frontier_lo, size0);
        if (over_budget_) break;
        if (full_space_ && keys_.size() == *full_space_) {
          saturated = true;
          break;
        }
      }
      frontier_lo = size0;
      if (saturated || over_budget_) break;
      if (keys_.size() == size0) break;  // nothing new: fixed point
    }
    complete_ = !over_budget_;
  }

  const std::vector<std::uint64_t>& keys() const { return keys_; }
  bool complete() const { return complete_; }
  int rounds() const { return rounds_; }

 private:
  void note_inserted() {
    if (keys_.size() > budget_) over_budget_ = true;
  }

  void apply_op(const FunctionTable& op, std::size_t lo, std::size_t hi) {
    int m = op.arity();
    if (m == 1) {
      for (std::size_t i = lo; i < hi && !over_budget_; ++i)
        if (insert(compose1(op, keys_[i]))) note_inserted();
      return;
    }
    if (m == 2) {
      if (n_ == 2) {
        binary_round_n2(op, lo, hi);
      } else {
        binary_round_generic(op, lo, hi);
      }
      return;
    }
    // arity >= 3: odometer over argument tuples with at least one frontier index
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    std::vector<std::uint64_t> args(static_cast<std::size_t>(m));
    tuple_rec(op, idx, args, 0, false, lo, hi);
  }

  void tuple_rec(const FunctionTable& op, std::vector<std::size_t>& idx,
                 std::vector<std::uint64_t>& args, std::size_t pos, bool has_frontier,
                 std::size_t lo, std::size_t hi) {
    if (over_budget_) return;
    if (pos == idx.size()) {
      if (!has_frontier) return;
      if (insert(compose_generic(op, args))) note_inserted();
      return;
    }
    for (std::size_t i = 0; i < hi; ++i) {
      idx[pos] = i;
      args[pos] = keys_[i];
      tuple_rec(op, idx, args, pos + 1, has_frontier || i >= lo, lo, hi);
      if (over_budget_) return;
    }
  }

  void binary_round_n2(const FunctionTable& op, std::size_t lo, std::size_t hi) {
    // leaf masks for the 2x2 truth table, entry order f(0,0) f(0,1) f(1,0) f(1,1)
    std::uint64_t full = used_mask_;
    std::uint64_t l00 = op.get(0) ? full : 0;
    std::uint64_t l01 = op.get(1) ? full : 0;
    std::uint64_t l10 = op.get(2) ? full : 0;
    std::uint64_t l11 = op.get(3) ? full : 0;
    auto comp = [&](std::uint64_t a, std::uint64_t b) {
      std::uint64_t w0 = l00 ^ ((l00 ^ l01) & b);
      std::uint64_t w1 = l10 ^ ((l10 ^ l11) & b);
      return w0 ^ ((w0 ^ w1) & a);
    };
    // ordered pairs with at least one frontier index: first-from-frontier
    // rows scan every column, older rows scan only frontier columns
    for (std::size_t i = 0; i < hi && !over_budget_; ++i) {
      std::uint64_t a = keys_[i];
      std::size_t jlo = i >= lo ? 0 : lo;
      for (std::size_t j = jlo; j < hi; ++j) {
        if (insert(comp(a, keys_[j]))) {
          note_inserted();
          if (over_budget_) break;
        }
      }
    }
  }

  void binary_round_generic(const FunctionTable& op, std::size_t lo, std::size_t hi) {
    for (std::size_t i = 0; i < hi && !over_budget_; ++i) {
      for (std::size_t j = i >= lo ? 0 : lo; j < hi && !over_budget_; ++j) {
        if (insert(compose2(op, keys_[i], keys_[j]))) note_inserted();
      }
    }
  }

  std::uint64_t compose1(const FunctionTable& op, std::uint64_t a) const {
    if (n_ == 2) {
      std::uint64_t l0 = op.get(0) ? used_mask_ : 0;
      std::uint64_t l1 = op.get(1) ? used_mask_ : 0;
      return l0 ^ ((l0 ^ l1) & a);
    }
    std::uint64_t out = 0;
    std::uint64_t mask = (std::uint64_t(1) << bits_) - 1;
    for (std::size_t e = 0; e < len_; ++e) {
      std::uint64_t v = (a >> (e * static_cast<std::size_t>(bits_))) & mask;
      out |= static_cast<std::uint64_t>(op.get(static_cast<std::size_t>(v)))
             << (e * static_cast<std::size_t>(bits_));
    }
    return out;
  }

  std::uint64_t compose2(const FunctionTable& op, std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0;
    std::uint64_t mask = (std::uint64_t(1) << bits_) - 1;
    for (std::size_t e = 0; e < len_; ++e) {
      std::size_t sh = e * static_cast<std::size_t>(bits_);
      std::size_t va = static_cast<std::size_t>((a >> sh) & mask);
      std::size_t vb = static_cast<std::size_t>((b >> sh) & mask);
      out |= static_cast<std::uint64_t>(op.get(va * static_cast<std::size_t>(n_) + vb)) << sh;
    }
    return out;
  }

  std::uint64_t compose_generic(const FunctionTable& op, std::span<const std::uint64_t> args) const {
    std::uint64_t out = 0;
    std::uint64_t mask = (std::uint64_t(1) << bits_) - 1;
    for (std::size_t e = 0; e < len_; ++e) {
      std::size_t sh = e * static_cast<std::size_t>(bits_);
      std::size_t idx = 0;
      for (std::uint64_t a : args) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>((a >> sh) & mask);
      out |= static_cast<std::uint64_t>(op.get(idx)) << sh;
    }
    return out;
  }

  int n_;
  int k_;
  int bits_;
  std::size_t len_;
  std::uint64_t budget_;
  std::size_t total_bits_;
  std::uint64_t used_mask_;
  std::optional<std::uint64_t> full_space_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint64_t> direct_;
  std::unordered_set<std::uint64_t> hashed_;
  bool over_budget_ = false;
  bool complete_ = false;
  int rounds_ = 0;
};

/// Fallback closure for tables wider than one word.
struct GenericCloneResult {
  std::vector<FunctionTable> tables;
  bool complete;
  int rounds;
};

inline GenericCloneResult generic_closure(const FiniteAlgebra& alg, int k,
                                          const std::vector<FunctionTable>& seed,
                                          std::uint64_t budget) {
  GenericCloneResult r{{}, true, 0};
  std::unordered_set<FunctionTable, FunctionTableHash> seen;
  std::vector<FunctionTable> known;
  bool over = false;
  auto ins = [&](const FunctionTable& t) {
    if (seen.insert(t).second) {
      known.push_back(t);
      if (known.size() > budget) over = true;
    }
  };
  for (const auto& t : seed) ins(t);
  auto full = function_space_size(alg.size(), k);
  std::size_t frontier_lo = 0;
  while (!over && !(full && known.size() == *full)) {
    std::size_t size0 = known.size();
    if (frontier_lo == size0) break;
    ++r.rounds;
    for (std::size_t op = 0; op < alg.op_count() && !over; ++op) {
      const FunctionTable& f = alg.table(op);
      int m = f.arity();
      if (m == 0) continue;
      std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
      std::vector<FunctionTable> args;
      // odometer over argument tuples with at least one frontier index
      auto rec = [&](auto&& self, std::size_t pos, bool has_frontier) -> void {
        if (over || (full && known.size() == *full)) return;
        if (pos == idx.size()) {
          if (!has_frontier) return;
          args.clear();
          for (std::size_t i : idx) args.push_back(known[i]);
          ins(compose(f, std::span<const FunctionTable>(args)));
          return;
        }
        for (std::size_t i = 0; i < size0; ++i) {
          idx[pos] = i;
          self(self, pos + 1, has_frontier || i >= frontier_lo);
          if (over || (full && known.size() == *full)) return;
        }
      };
      rec(rec, 0, false);
    }
    frontier_lo = size0;
    if (known.size() == size0) break;
  }
  r.complete = !over;
  r.tables = std::move(known);
  return r;
}

}  // namespace detail

/// Generate Clo_k(A) by semi-naive (frontier) fixed-point closure from the
/// k projections and the nullary constants. Output order is canonical and
/// independent of insertion order. If the table count would exceed the
/// budget, generation stops with complete=false; the partial set is still
/// a genuine subset of the clone.
inline CloneSet generate_clone(const FiniteAlgebra& alg, int k,
                               std::uint64_t budget = kDefaultCloneBudget) {
  if (k < 1) throw DomainError("generate_clone: arity must be >= 1");
  int n = alg.size();
  CloneSet result;
  result.n = n;
  result.arity = k;
  result.budget = budget;

  std::vector<FunctionTable> seed;
  for (int v = 0; v < k; ++v) seed.push_back(FunctionTable::projection(n, k, v));
  for (std::size_t op = 0; op < alg.op_count(); ++op)
    if (alg.symbol(op).arity == 0)
      seed.push_back(FunctionTable::constant(n, k, alg.table(op).get(0)));

  if (detail::PackedCloneEngine::fits(n, k)) {
    detail::PackedCloneEngine engine(n, k, budget);
    for (const auto& t : seed) engine.insert(*t.packed_key());
    std::vector<const FunctionTable*> ops;
    for (std::size_t op = 0; op < alg.op_count(); ++op)
      if (alg.symbol(op).arity >= 1) ops.push_back(&alg.table(op));
    engine.run(ops);
    result.tables.reserve(engine.keys().size());
    for (std::uint64_t key : engine.keys())
      result.tables.push_back(FunctionTable::from_packed_key(n, k, key));
    result.complete = engine.complete();
    result.generation_rounds = engine.rounds();
  } else {
    auto r = detail::generic_closure(alg, k, seed, budget);
    result.tables = std::move(r.tables);
    result.complete = r.complete;
    result.generation_rounds = r.rounds;
  }
  std::sort(result.tables.begin(), result.tables.end());
  return result;
}

// ---------------------------------------------------------------------------
// Primality decision procedures
// ---------------------------------------------------------------------------

/// Membership of one Boolean table in each of Post's five maximal clones.
struct PostClasses {
  bool preserves_zero = false;
  bool preserves_one = false;
  bool monotone = false;
  bool self_dual = false;
  bool affine = false;
};

inline PostClasses post_classes(const FunctionTable& f) {
  if (f.universe() != 2) throw DomainError("post_classes: universe must be {0,1}");
  std::size_t len = f.size();
  PostClasses c;
  c.preserves_zero = f.get(0) == 0;
  c.preserves_one = f.get(len - 1) == 1;
  c.monotone = true;
  for (std::size_t i = 0; i < len && c.monotone; ++i)
    for (std::size_t j = 0; j < len; ++j)
      if ((i & j) == i && f.get(i) > f.get(j)) {
        c.monotone = false;
        break;
      }
  c.self_dual = true;
  for (std::size_t i = 0; i < len; ++i)
    if (f.get(~i & (len - 1)) != 1 - f.get(i)) {
      c.self_dual = false;
      break;
    }
  // parity test f(x) ^ f(y) ^ f(z) == f(x ^ y ^ z) over all triples
  c.affine = true;
  for (std::size_t x = 0; x < len && c.affine; ++x)
    for (std::size_t y = 0; y < len && c.affine; ++y)
      for (std::size_t z = 0; z < len; ++z)
        if ((f.get(x) ^ f.get(y) ^ f.get(z)) != f.get(x ^ y ^ z)) {
          c.affine = false;
          break;
        }
  return c;
}

enum class PrimalStatus { Primal, NotPrimal, Unknown };
enum class PrimalMethod { PostTest, Cardinality };

struct PrimalityVerdict {
  PrimalStatus status = PrimalStatus::Unknown;
  PrimalMethod method = PrimalMethod::PostTest;
  /// NotPrimal at n=2: the maximal clones containing every basic operation.
  std::vector<std::string> post_witness;
  /// NotPrimal by cardinality: a binary function outside the clone.
  std::optional<FunctionTable> missing;
};

/// Primality via |Clo_2(A)| = n^(n^2) (Sierpinski: binary functions
/// generate everything). Works for any n, subject to budget.
inline PrimalityVerdict is_primal_cardinality(const FiniteAlgebra& alg,
                                              std::uint64_t budget = kDefaultCloneBudget) {
  PrimalityVerdict v;
  v.method = PrimalMethod::Cardinality;
  int n = alg.size();
  auto total = detail::function_space_size(n, 2);
  if (!total || *total > budget) {
    v.status = PrimalStatus::Unknown;
    return v;
  }
  CloneSet c2 = generate_clone(alg, 2, budget);
  if (!c2.complete) {
    v.status = PrimalStatus::Unknown;
    return v;
  }
  if (c2.tables.size() == *total) {
    v.status = PrimalStatus::Primal;
    return v;
  }
  v.status = PrimalStatus::NotPrimal;
  // witness: canonically least binary table outside the clone
  std::size_t len = pow_size(n, 2);
  FunctionTable cur(n, 2);
  std::vector<Elem> e(len, 0);
  for (std::uint64_t it = 0; it < *total; ++it) {
    if (!c2.contains_table(cur)) {
      v.missing = cur;
      break;
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
  return v;
}

/// For n = 2 the Post test: primal iff for each of the five maximal clones
/// some basic operation escapes it. For n >= 3 the cardinality method.
inline PrimalityVerdict is_primal(const FiniteAlgebra& alg,
                                  std::uint64_t budget = kDefaultCloneBudget) {
  if (alg.size() != 2) return is_primal_cardinality(alg, budget);
  PrimalityVerdict v;
  v.method = PrimalMethod::PostTest;
  bool all_p0 = true, all_p1 = true, all_m = true, all_d = true, all_a = true;
  for (std::size_t op = 0; op < alg.op_count(); ++op) {
    PostClasses c = post_classes(alg.table(op));
    all_p0 &= c.preserves_zero;
    all_p1 &= c.preserves_one;
    all_m &= c.monotone;
    all_d &= c.self_dual;
    all_a &= c.affine;
  }
  if (all_p0) v.post_witness.push_back("P0");
  if (all_p1) v.post_witness.push_back("P1");
  if (all_m) v.post_witness.push_back("M");
  if (all_d) v.post_witness.push_back("D");
  if (all_a) v.post_witness.push_back("A");
  v.status = v.post_witness.empty() ? PrimalStatus::Primal : PrimalStatus::NotPrimal;
  return v;
}

/// True iff every k-ary function with f(x,...,x) = x is a term.
/// Enumerates the n^(n^k - n) idempotent tables directly.
inline bool is_idemprimal_at(const FiniteAlgebra& alg, int k,
                             std::uint64_t budget = kDefaultFunctionBudget) {
  if (k < 1) throw DomainError("is_idemprimal_at: arity must be >= 1");
  int n = alg.size();
  std::size_t len = pow_size(n, k);
  std::size_t free_positions = len - static_cast<std::size_t>(n);
  // candidate count n^(len - n)
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < free_positions; ++i) {
    if (candidates > budget / static_cast<std::uint64_t>(n) + 1)
      throw BudgetError("is_idemprimal_at: budget exceeded for idempotent enumeration");
    candidates *= static_cast<std::uint64_t>(n);
  }
  if (candidates > budget)
    throw BudgetError("is_idemprimal_at: budget exceeded for idempotent enumeration");

  CloneSet clone = generate_clone(alg, k, budget);
  if (!clone.complete)
    throw BudgetError("is_idemprimal_at: clone generation exceeded budget");

  // diagonal indices (x, ..., x)
  std::vector<std::size_t> diag(static_cast<std::size_t>(n));
  std::vector<bool> is_diag(len, false);
  for (Elem x = 0; x < static_cast<Elem>(n); ++x) {
    std::vector<Elem> tup(static_cast<std::size_t>(k), x);
    diag[x] = tuple_index(std::span<const Elem>(tup), n);
    is_diag[diag[x]] = true;
  }
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < len; ++i)
    if (!is_diag[i]) free_idx.push_back(i);

  FunctionTable cur(n, k);
  for (Elem x = 0; x < static_cast<Elem>(n); ++x) cur.set(diag[x], x);
  std::vector<Elem> e(free_idx.size(), 0);
  for (std::uint64_t it = 0;; ++it) {
    if (!clone.contains_table(cur)) return false;
    std::size_t pos = free_idx.size();
    while (pos-- > 0) {
      if (static_cast<int>(e[pos]) + 1 < n) {
        ++e[pos];
        cur.set(free_idx[pos], e[pos]);
        break;
      }
      e[pos] = 0;
      cur.set(free_idx[pos], 0);
    }
    if (pos == static_cast<std::size_t>(-1)) break;  // odometer wrapped
  }
  return true;
}

// ---------------------------------------------------------------------------
// Automorphism-compatible functions
// ---------------------------------------------------------------------------

/// The k-ary functions commuting with every automorphism. `count` is always
/// exact (product over orbits of the stabilizer-fixed value counts);
/// `tables` is materialized only when count <= budget.
struct CompatibleSet {
  int arity = 0;
  BigInt count = 0;
  bool materialized = false;
  std::vector<FunctionTable> tables;  // canonical order when materialized
};

inline CompatibleSet compatible_functions(const FiniteAlgebra& alg, int k,
                                          const AutomorphismGroup& aut,
                                          std::uint64_t budget = kDefaultFunctionBudget) {
  if (k < 1) throw DomainError("compatible_functions: arity must be >= 1");
  int n = alg.size();
  OrbitPartition part = orbit_partition(aut, k);

  // per orbit: representative, stabilizer, values fixed by the stabilizer
  struct OrbitChoice {
    std::size_t rep;
    std::vector<std::size_t> stabilizer;  // indices into aut.elements
    std::vector<Elem> allowed;
  };
  std::vector<OrbitChoice> choices;
  CompatibleSet out;
  out.arity = k;
  out.count = 1;
  for (const Orbit& o : part.orbits) {
    OrbitChoice oc;
    oc.rep = o.representative;
    std::vector<Elem> rep_tuple = index_tuple(o.representative, k, n);
    std::vector<Elem> mapped(rep_tuple.size());
    for (std::size_t p = 0; p < aut.elements.size(); ++p) {
      const auto& phi = aut.elements[p];
      for (std::size_t i = 0; i < rep_tuple.size(); ++i) mapped[i] = phi[rep_tuple[i]];
      if (tuple_index(std::span<const Elem>(mapped), n) == o.representative)
        oc.stabilizer.push_back(p);
    }
    for (Elem v = 0; v < static_cast<Elem>(n); ++v) {
      bool fixed = true;
      for (std::size_t p : oc.stabilizer)
        if (aut.elements[p][v] != v) {
          fixed = false;
          break;
        }
      if (fixed) oc.allowed.push_back(v);
    }
    out.count *= static_cast<unsigned>(oc.allowed.size());
    choices.push_back(std::move(oc));
  }

  if (out.count > budget) return out;  // count only

  // materialize: odometer over per-orbit choices, propagate equivariantly
  out.materialized = true;
  std::vector<std::size_t> pick(choices.size(), 0);
  std::vector<Elem> rep_tuple, mapped;
  for (;;) {
    FunctionTable t(n, k);
    for (std::size_t ci = 0; ci < choices.size(); ++ci) {
      Elem v = choices[ci].allowed[pick[ci]];
      rep_tuple = index_tuple(choices[ci].rep, k, n);
      mapped.resize(rep_tuple.size());
      for (const auto& phi : aut.elements) {
        for (std::size_t i = 0; i < rep_tuple.size(); ++i) mapped[i] = phi[rep_tuple[i]];
        t.set(tuple_index(std::span<const Elem>(mapped), n), phi[v]);
      }
    }
    out.tables.push_back(std::move(t));
    std::size_t pos = pick.size();
    while (pos-- > 0) {
      if (pick[pos] + 1 < choices[pos].allowed.size()) {
        ++pick[pos];
        break;
      }
      pick[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  std::sort(out.tables.begin(), out.tables.end());
  return out;
}

/// Cross-check route: filter all n^(n^k) tables by the equivariance
/// condition directly. Only for tiny function spaces.
inline std::vector<FunctionTable> compatible_functions_exhaustive(
    const FiniteAlgebra& alg, int k, const AutomorphismGroup& aut,
    std::uint64_t budget = kDefaultFunctionBudget) {
  int n = alg.size();
  auto total = detail::function_space_size(n, k);
  if (!total || *total > budget)
    throw BudgetError("compatible_functions_exhaustive: function space exceeds budget");
  std::size_t len = pow_size(n, k);
  std::vector<FunctionTable> out;
  FunctionTable cur(n, k);
  std::vector<Elem> e(len, 0);
  std::vector<Elem> tuple, mapped;
  for (std::uint64_t it = 0; it < *total; ++it) {
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) {
      tuple = index_tuple(i, k, n);
      mapped.resize(tuple.size());
      for (const auto& phi : aut.elements) {
        for (std::size_t j = 0; j < tuple.size(); ++j) mapped[j] = phi[tuple[j]];
        if (cur.get(tuple_index(std::span<const Elem>(mapped), n)) != phi[cur.get(i)]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(cur);
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
  std::sort(out.begin(), out.end());
  return out;
}

/// Clo_k is always contained in the compatible functions, so equality of
/// cardinalities decides automorphism-primality at arity k.
inline bool is_automorphism_primal_at(const CloneSet& clone, const CompatibleSet& compat) {
  if (!clone.complete) throw BudgetError("is_automorphism_primal_at: clone incomplete");
  return BigInt(static_cast<std::uint64_t>(clone.tables.size())) == compat.count;
}

}  // namespace ualab
