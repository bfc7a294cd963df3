#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "ualab/errors.hpp"

namespace ualab {

/// Element of a finite universe {0, ..., n-1}.
using Elem = unsigned;

/// Number of bits needed to store one element of a size-n universe.
/// n = 1 still uses one bit so that tables are never zero-width.
inline int bits_for(int n) {
  int b = 1;
  while ((1 << b) < n) ++b;
  return b;
}

/// n^k as size_t, with an overflow guard. Throws DomainError on overflow.
inline std::size_t pow_size(int n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (n != 0 && r > static_cast<std::size_t>(-1) / static_cast<std::size_t>(n))
      throw DomainError("n^k overflows size_t");
    r *= static_cast<std::size_t>(n);
  }
  return r;
}

/// Mixed-radix tuple encoding, leftmost component most significant:
/// index = sum tuple[i] * n^(k-1-i).
inline std::size_t tuple_index(std::span<const Elem> tuple, int n) {
  std::size_t idx = 0;
  for (Elem x : tuple) {
    if (static_cast<int>(x) >= n) throw DomainError("tuple component out of range");
    idx = idx * static_cast<std::size_t>(n) + x;
  }
  return idx;
}

inline std::size_t tuple_index(std::initializer_list<Elem> tuple, int n) {
  return tuple_index(std::span<const Elem>(tuple.begin(), tuple.size()), n);
}

/// Inverse of tuple_index.
inline std::vector<Elem> index_tuple(std::size_t index, int k, int n) {
  if (index >= pow_size(n, k)) throw DomainError("tuple index out of range");
  std::vector<Elem> t(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<Elem>(index % static_cast<std::size_t>(n));
    index /= static_cast<std::size_t>(n);
  }
  return t;
}

/// A k-ary function A^k -> A stored as a flat array under tuple_index
/// encoding. Entries are bit-packed, ceil(log2 n) bits each, so that
/// coincidence counting between two tables reduces to word-level xor,
/// or-folding and popcount. This is the hot representation for clone
/// elements, term functions and arbitrary k-ary functions.
class FunctionTable {
 public:
  FunctionTable(int n, int arity)
      : n_(n), arity_(arity), bits_(bits_for(n)), len_(pow_size(n, arity)) {
    if (n < 1) throw DomainError("universe size must be >= 1");
    if (arity < 0) throw DomainError("negative arity");
    fields_ = 64 / bits_;
    words_.assign((len_ + fields_ - 1) / fields_, 0);
    if (words_.empty()) words_.push_back(0);  // arity 0 has one entry; len_ >= 1 always
    lane_mask_ = 0;
    for (std::size_t f = 0; f < fields_; ++f)
      lane_mask_ |= std::uint64_t(1) << (f * static_cast<std::size_t>(bits_));
  }

  FunctionTable(int n, int arity, std::span<const Elem> entries) : FunctionTable(n, arity) {
    if (entries.size() != len_) throw DomainError("table length mismatch");
    for (std::size_t i = 0; i < len_; ++i) set(i, entries[i]);
  }

  FunctionTable(int n, int arity, std::initializer_list<Elem> entries)
      : FunctionTable(n, arity, std::span<const Elem>(entries.begin(), entries.size())) {}

  static FunctionTable projection(int n, int k, int var) {
    if (var < 0 || var >= k) throw DomainError("projection index out of range");
    FunctionTable t(n, k);
    std::size_t period = pow_size(n, k - 1 - var);
    for (std::size_t i = 0; i < t.len_; ++i)
      t.set(i, static_cast<Elem>((i / period) % static_cast<std::size_t>(n)));
    return t;
  }

  static FunctionTable constant(int n, int k, Elem c) {
    FunctionTable t(n, k);
    if (static_cast<int>(c) >= n) throw DomainError("constant out of range");
    for (std::size_t i = 0; i < t.len_; ++i) t.set(i, c);
    return t;
  }

  int universe() const { return n_; }
  int arity() const { return arity_; }
  std::size_t size() const { return len_; }
  int entry_bits() const { return bits_; }

  Elem get(std::size_t i) const {
    std::size_t w = i / fields_;
    int sh = static_cast<int>(i % fields_) * bits_;
    return static_cast<Elem>((words_[w] >> sh) & mask());
  }

  void set(std::size_t i, Elem v) {
    if (static_cast<int>(v) >= n_) throw DomainError("table entry out of range");
    std::size_t w = i / fields_;
    int sh = static_cast<int>(i % fields_) * bits_;
    words_[w] = (words_[w] & ~(mask() << sh)) | (static_cast<std::uint64_t>(v) << sh);
  }

  Elem operator()(std::span<const Elem> tuple) const { return get(tuple_index(tuple, n_)); }
  Elem operator()(std::initializer_list<Elem> tuple) const { return get(tuple_index(tuple, n_)); }

  /// |{x : f(x) = g(x)}| via per-word equality masks and popcount.
  std::size_t agreement_count(const FunctionTable& o) const {
    require_same_shape(o);
    std::size_t agree = 0;
    std::size_t remaining = len_;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t diff = words_[w] ^ o.words_[w];
      std::uint64_t fold = diff;
      for (int b = 1; b < bits_; ++b) fold |= diff >> b;
      fold &= lane_bits();
      std::size_t lanes = remaining < fields_ ? remaining : fields_;
      std::uint64_t used = lanes == fields_ ? lane_bits()
                                            : (lane_bits() & ((std::uint64_t(1) << (lanes * static_cast<std::size_t>(bits_))) - 1));
      agree += lanes - static_cast<std::size_t>(std::popcount(fold & used));
      remaining -= lanes;
    }
    return agree;
  }

  /// Hamming distance D(f, g) over the alphabet A.
  std::size_t hamming_distance(const FunctionTable& o) const {
    return len_ - agreement_count(o);
  }

  bool operator==(const FunctionTable& o) const {
    return n_ == o.n_ && arity_ == o.arity_ && words_ == o.words_;
  }

  /// Canonical order: lexicographic on the entry sequence.
  std::strong_ordering operator<=>(const FunctionTable& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    if (auto c = arity_ <=> o.arity_; c != 0) return c;
    for (std::size_t i = 0; i < len_; ++i)
      if (auto c = get(i) <=> o.get(i); c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// Whole table as a single packed word, when it fits.
  std::optional<std::uint64_t> packed_key() const {
    if (words_.size() == 1) return words_[0];
    return std::nullopt;
  }

  static FunctionTable from_packed_key(int n, int arity, std::uint64_t key) {
    FunctionTable t(n, arity);
    t.words_[0] = key;
    return t;
  }

  std::vector<Elem> entries() const {
    std::vector<Elem> e(len_);
    for (std::size_t i = 0; i < len_; ++i) e[i] = get(i);
    return e;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (static_cast<std::uint64_t>(n_) << 32 ^ static_cast<std::uint64_t>(arity_));
    for (std::uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::uint64_t mask() const { return bits_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << bits_) - 1; }

  // Bit 0 of every lane of a full word.
  std::uint64_t lane_bits() const { return lane_mask_; }

  void require_same_shape(const FunctionTable& o) const {
    if (n_ != o.n_ || arity_ != o.arity_)
      throw DomainError("function tables have mismatched universe or arity");
  }

  int n_;
  int arity_;
  int bits_;
  std::size_t len_;
  std::size_t fields_;
  std::uint64_t lane_mask_ = 0;
  std::vector<std::uint64_t> words_;
};

struct FunctionTableHash {
  std::size_t operator()(const FunctionTable& t) const { return t.hash(); }
};

/// f(g_1, ..., g_m) pointwise: every g_j has arity k, f has arity m,
/// the result has arity k.
inline FunctionTable compose(const FunctionTable& f, std::span<const FunctionTable> args) {
  int n = f.universe();
  int m = f.arity();
  if (static_cast<std::size_t>(m) != args.size()) throw DomainError("compose: arity mismatch");
  int k = args.empty() ? 0 : args[0].arity();
  for (const auto& g : args) {
    if (g.universe() != n || g.arity() != k)
      throw DomainError("compose: argument tables have mismatched shape");
  }
  if (m == 0) {
    // constant extended to arity k (k = 0 allowed, but callers pass k >= 1)
    return FunctionTable::constant(n, k, f.get(0));
  }
  FunctionTable out(n, k);
  std::size_t len = out.size();
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t idx = 0;
    for (int j = 0; j < m; ++j) idx = idx * static_cast<std::size_t>(n) + args[static_cast<std::size_t>(j)].get(i);
    out.set(i, f.get(idx));
  }
  return out;
}

}  // namespace ualab
