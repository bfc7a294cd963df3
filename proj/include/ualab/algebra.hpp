#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ualab/table.hpp"

namespace ualab {

struct OpSymbol {
  std::string name;
  int arity;
};

/// A finite algebra: universe {0, ..., n-1} plus named operation tables.
/// Immutable once built; every downstream computation is a pure function
/// of an algebra value, so algebras can be shared freely across threads.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, int size) : name_(std::move(name)), size_(size) {
    if (size < 1) throw DomainError("algebra size must be >= 1");
  }

  void add_op(const std::string& op_name, FunctionTable table) {
    if (table.universe() != size_) throw DomainError("operation table universe mismatch");
    if (index_.count(op_name)) throw DomainError("duplicate op name: " + op_name);
    index_[op_name] = ops_.size();
    ops_.push_back({op_name, table.arity()});
    tables_.push_back(std::move(table));
  }

  void add_op(const std::string& op_name, int arity, std::span<const Elem> entries) {
    add_op(op_name, FunctionTable(size_, arity, entries));
  }

  void add_op(const std::string& op_name, int arity, std::initializer_list<Elem> entries) {
    add_op(op_name, FunctionTable(size_, arity, std::span<const Elem>(entries.begin(), entries.size())));
  }

  const std::string& name() const { return name_; }
  int size() const { return size_; }
  std::size_t op_count() const { return ops_.size(); }
  const OpSymbol& symbol(std::size_t i) const { return ops_.at(i); }
  const FunctionTable& table(std::size_t i) const { return tables_.at(i); }

  std::optional<std::size_t> op_index(const std::string& op_name) const {
    auto it = index_.find(op_name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const FunctionTable& table(const std::string& op_name) const {
    auto i = op_index(op_name);
    if (!i) throw DomainError("unknown op: " + op_name);
    return tables_[*i];
  }

  bool same_signature(const FiniteAlgebra& o) const {
    if (ops_.size() != o.ops_.size()) return false;
    for (std::size_t i = 0; i < ops_.size(); ++i)
      if (ops_[i].name != o.ops_[i].name || ops_[i].arity != o.ops_[i].arity) return false;
    return true;
  }

 private:
  std::string name_;
  int size_;
  std::vector<OpSymbol> ops_;
  std::vector<FunctionTable> tables_;
  std::map<std::string, std::size_t> index_;
};

namespace detail {

struct AlgToken {
  std::string text;
  int line;
};

inline std::vector<AlgToken> tokenize_alg(std::istream& in) {
  std::vector<AlgToken> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back({tok, lineno});
  }
  return out;
}

inline bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

/// Parse the ".alg" text format:
///   algebra <name>
///   size <n>
///   op <name> <arity>
///   <n^arity integers in tuple_index order>
/// '#' starts a comment to end of line.
inline FiniteAlgebra parse_algebra(std::istream& in) {
  auto toks = detail::tokenize_alg(in);
  std::size_t p = 0;
  auto need = [&](const std::string& what) -> const detail::AlgToken& {
    if (p >= toks.size())
      throw ParseError("unexpected end of input, expected " + what,
                       toks.empty() ? 1 : toks.back().line);
    return toks[p++];
  };
  const auto& kw = need("'algebra'");
  if (kw.text != "algebra") throw ParseError("expected 'algebra', got '" + kw.text + "'", kw.line);
  std::string name = need("algebra name").text;
  const auto& sz = need("'size'");
  if (sz.text != "size") throw ParseError("expected 'size', got '" + sz.text + "'", sz.line);
  const auto& nt = need("size value");
  if (!detail::is_integer(nt.text)) throw ParseError("size must be an integer", nt.line);
  int n = std::stoi(nt.text);
  if (n < 1) throw ParseError("size must be >= 1", nt.line);

  FiniteAlgebra alg(name, n);
  while (p < toks.size()) {
    const auto& op_kw = toks[p++];
    if (op_kw.text != "op") throw ParseError("expected 'op', got '" + op_kw.text + "'", op_kw.line);
    std::string op_name = need("op name").text;
    const auto& ar = need("op arity");
    if (!detail::is_integer(ar.text)) throw ParseError("op arity must be an integer", ar.line);
    int arity = std::stoi(ar.text);
    std::size_t len = pow_size(n, arity);
    std::vector<Elem> entries(len);
    for (std::size_t i = 0; i < len; ++i) {
      const auto& e = need("table entry for op " + op_name);
      if (!detail::is_integer(e.text)) throw ParseError("table entry must be an integer", e.line);
      long v = std::stol(e.text);
      if (v < 0 || v >= n)
        throw ParseError("entry out of range for op " + op_name, e.line);
      entries[i] = static_cast<Elem>(v);
    }
    try {
      alg.add_op(op_name, arity, entries);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), op_kw.line);
    }
  }
  return alg;
}

inline FiniteAlgebra parse_algebra(const std::string& text) {
  std::istringstream in(text);
  return parse_algebra(in);
}

/// Inverse of parse_algebra; round-trips exactly.
inline std::string serialize_algebra(const FiniteAlgebra& a) {
  std::ostringstream out;
  out << "algebra " << a.name() << "\n";
  out << "size " << a.size() << "\n";
  for (std::size_t i = 0; i < a.op_count(); ++i) {
    const auto& sym = a.symbol(i);
    out << "op " << sym.name << " " << sym.arity << "\n";
    const auto& t = a.table(i);
    for (std::size_t j = 0; j < t.size(); ++j) out << t.get(j) << (j + 1 == t.size() ? "\n" : " ");
  }
  return out.str();
}

}  // namespace ualab
