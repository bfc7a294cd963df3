// Command-line front end for the ualab library.
//
// Exit codes: 0 success, 1 usage error, 2 budget exceeded,
// 3 property-check failure. Reports go to stdout, messages to stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ualab/ualab.hpp"

namespace {

using nlohmann::json;
using namespace ualab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitCheckFailed = 3;

FiniteAlgebra load_algebra(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return builtin_algebra(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw DomainError("cannot open algebra file: " + source);
  return parse_algebra(in);
}

std::string table_string(const FunctionTable& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(t.get(i));
  }
  return s;
}

std::string values_string(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += " ";
    s += values[i].str();
  }
  return s;
}

json spectrum_json(const SpectrumReport& rep) {
  json j;
  j["algebra"] = rep.algebra;
  j["arity"] = rep.arity;
  j["complete"] = rep.complete;
  json vals = json::array();
  for (const auto& v : rep.values) vals.push_back(v.str());
  j["values"] = vals;
  return j;
}

// ---------------------------------------------------------------------------
// check suites
// ---------------------------------------------------------------------------

struct CheckState {
  int failures = 0;
  void report(const std::string& what, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  }
};

std::vector<FiniteAlgebra> inclusion_corpus(unsigned seed) {
  std::vector<FiniteAlgebra> corpus;
  for (int i = 0; i < 16; ++i) corpus.push_back(make_groupoid2(i));
  std::mt19937 rng(seed);
  for (int i = 0; i < 20; ++i) corpus.push_back(random_groupoid3(rng, "rand3_" + std::to_string(i)));
  return corpus;
}

void check_orbit_inclusion_suite(CheckState& st, unsigned seed, int max_k, std::uint64_t budget) {
  for (const auto& alg : inclusion_corpus(seed)) {
    // order-3 closures are budget-capped; partial spectra are still
    // guaranteed subsets, so the inclusion stays meaningful.
    std::uint64_t b = alg.size() == 2 ? kDefaultCloneBudget : budget;
    for (int k = 1; k <= max_k; ++k) {
      OrbitInclusion inc = check_orbit_inclusion(alg, k, b);
      st.report(alg.name() + " k=" + std::to_string(k) + " spectrum within orbit bound" +
                    (inc.spectrum_complete ? "" : " (partial spectrum)"),
                inc.holds);
      if (inc.equality_expected)
        st.report(alg.name() + " k=" + std::to_string(k) + " equality (automorphism-primal)",
                  inc.equality_holds);
    }
  }
  OrbitInclusion b2 = check_orbit_inclusion(make_boolean2(), 2);
  st.report("boolean2 k=2 equality expected and holds", b2.equality_expected && b2.equality_holds);
}

void check_product_law_suite(CheckState& st, unsigned seed) {
  std::mt19937 rng(seed);
  for (int i = 0; i < 20; ++i) {
    FiniteAlgebra a = random_groupoid3(rng, "pa_" + std::to_string(i));
    FiniteAlgebra b = random_groupoid3(rng, "pb_" + std::to_string(i));
    Equation eq = random_equation(rng, a, 2, 3);
    LemmaResult r = lemma_product_check(eq, a, b);
    st.report("product law " + a.name() + " x " + b.name() + " : " + eq.str(), r.holds);
  }
}

void check_barrier_suite(CheckState& st) {
  for (const char* key : {"or_xor", "and_xnor", "lattice01", "neg_xor3"}) {
    PrimReport rep = prim_at(builtin_algebra(key), 1);
    st.report(std::string(key) + " prim_1 = 1/2", rep.prim_k == Rational(1, 2));
  }
  FiniteAlgebra nand = make_groupoid2(14);
  PrimalityVerdict post = is_primal(nand);
  PrimalityVerdict card = is_primal_cardinality(nand);
  st.report("nand primal by Post test", post.status == PrimalStatus::Primal);
  st.report("nand primal by cardinality", card.status == PrimalStatus::Primal);
}

void check_quadrilateral_suite(CheckState& st) {
  struct Case {
    std::string key;
    int k;
  };
  const std::vector<Case> cases = {
      {"boolean2", 1}, {"boolean2", 2}, {"boolean2", 3}, {"z2plus", 2},  {"z2plus", 3},
      {"z2plus", 4},   {"lattice2", 1}, {"lattice2", 2}, {"zp:3", 1},    {"zp:3", 2},
      {"v4", 1},       {"nand", 1},     {"nand", 2},     {"groupoid2:6", 2},
  };
  for (const auto& c : cases) {
    FiniteAlgebra alg = builtin_algebra(c.key);
    PrimReport prim = prim_at(alg, c.k);
    SpectrumReport spec = pspec_at(alg, c.k);
    std::string label = c.key + " k=" + std::to_string(c.k);
    if (prim.prim_k == Rational(1)) {
      std::size_t expected = pow_size(alg.size(), c.k) + 1;
      st.report(label + " primal slice has all n^k+1 values", spec.values.size() == expected);
    } else {
      BigInt bound = quadrilateral_bound(prim.prim_k);
      st.report(label + " |spectrum| >= floor(1/(4(1-prim)))",
                BigInt(spec.values.size()) >= bound);
    }
  }
}

// ---------------------------------------------------------------------------

int dispatch(CLI::App& app) {
  // ---- prob ----
  auto* prob = app.add_subcommand("prob", "Probability of an equation over an algebra");
  std::string prob_alg, prob_eq;
  int prob_vars = 0;
  prob->add_option("--algebra", prob_alg, "file path or builtin:key")->required();
  prob->add_option("--equation", prob_eq, "s-expression (= lhs rhs)")->required();
  prob->add_option("--vars", prob_vars, "explicit variable count (adds dummies)");
  prob->callback([&] {
    FiniteAlgebra alg = load_algebra(prob_alg);
    Equation eq = parse_equation(prob_eq, alg, prob_vars);
    std::cout << equation_probability(alg, eq) << "\n";
  });

  // ---- spectrum ----
  auto* spectrum = app.add_subcommand("spectrum", "Arity-k slice of the probabilistic spectrum");
  std::string spec_alg, spec_format = "text";
  int spec_k = 1, spec_threads = 1;
  std::uint64_t spec_budget = kDefaultCloneBudget;
  spectrum->add_option("--algebra", spec_alg)->required();
  spectrum->add_option("--arity", spec_k)->required();
  spectrum->add_option("--budget", spec_budget, "clone table budget");
  spectrum->add_option("--threads", spec_threads, "worker cap (output-invariant)");
  spectrum->add_option("--format", spec_format)->check(CLI::IsMember({"text", "json"}));
  spectrum->callback([&] {
    FiniteAlgebra alg = load_algebra(spec_alg);
    SpectrumReport rep = pspec_at(alg, spec_k, spec_budget, spec_threads);
    if (spec_format == "json") {
      std::cout << spectrum_json(rep).dump() << "\n";
    } else {
      std::cout << "algebra " << rep.algebra << " arity " << rep.arity << " complete "
                << (rep.complete ? "true" : "false") << " pairs " << rep.pair_count << "\n"
                << values_string(rep.values) << "\n";
    }
  });

  // ---- clone ----
  auto* clone = app.add_subcommand("clone", "Clone statistics at an arity");
  std::string clone_alg;
  int clone_k = 1;
  std::uint64_t clone_budget = kDefaultCloneBudget;
  clone->add_option("--algebra", clone_alg)->required();
  clone->add_option("--arity", clone_k)->required();
  clone->add_option("--budget", clone_budget);
  clone->callback([&] {
    FiniteAlgebra alg = load_algebra(clone_alg);
    CloneSet c = generate_clone(alg, clone_k, clone_budget);
    std::cout << "algebra " << alg.name() << " arity " << c.arity << " size " << c.tables.size()
              << " complete " << (c.complete ? "true" : "false") << " rounds "
              << c.generation_rounds << "\n";
  });

  // ---- aut ----
  auto* aut = app.add_subcommand("aut", "Automorphism group and orbits");
  std::string aut_alg;
  int aut_k = 1;
  aut->add_option("--algebra", aut_alg)->required();
  aut->add_option("--arity", aut_k, "orbit arity (default 1)");
  aut->callback([&] {
    FiniteAlgebra alg = load_algebra(aut_alg);
    AutomorphismGroup g = automorphism_group(alg);
    std::cout << "order " << g.order() << "\n";
    for (const auto& phi : g.elements) {
      std::cout << "perm";
      for (Elem x : phi) std::cout << " " << x;
      std::cout << "\n";
    }
    std::cout << "fixed";
    for (Elem x : g.fixed_points) std::cout << " " << x;
    std::cout << "\n";
    OrbitPartition part = orbit_partition(g, aut_k);
    std::cout << "orbits arity " << aut_k << " count " << part.orbits.size() << " sizes";
    for (std::size_t s : part.sizes()) std::cout << " " << s;
    std::cout << "\n";
  });

  // ---- orbit-bound ----
  auto* ob = app.add_subcommand("orbit-bound", "Subset-sum orbit bound on the spectrum slice");
  std::string ob_alg;
  int ob_k = 1;
  ob->add_option("--algebra", ob_alg)->required();
  ob->add_option("--arity", ob_k)->required();
  ob->callback([&] {
    FiniteAlgebra alg = load_algebra(ob_alg);
    std::cout << values_string(orbit_bound_at(alg, ob_k)) << "\n";
  });

  // ---- prim ----
  auto* prim = app.add_subcommand("prim", "Arity-k primality (1 - normalized covering radius)");
  std::string prim_alg;
  int prim_k = 1;
  std::uint64_t prim_budget = kDefaultFunctionBudget;
  prim->add_option("--algebra", prim_alg)->required();
  prim->add_option("--arity", prim_k)->required();
  prim->add_option("--budget", prim_budget, "function enumeration budget");
  prim->callback([&] {
    FiniteAlgebra alg = load_algebra(prim_alg);
    PrimReport rep = prim_at(alg, prim_k, kDefaultCloneBudget, prim_budget);
    std::cout << rep.prim_k << "\n"
              << "method " << (rep.method == PrimMethod::WalshHadamard ? "WalshHadamard" : "Exhaustive")
              << "\n"
              << "covering-radius " << rep.covering_radius << "\n"
              << "hardest " << table_string(rep.hardest) << "\n";
  });

  // ---- nonlinearity ----
  auto* nl = app.add_subcommand("nonlinearity", "Walsh-Hadamard nonlinearity of a Boolean table");
  std::string nl_table;
  nl->add_option("--table", nl_table, "2^k bits, e.g. 0110")->required();
  nl->callback([&] {
    std::size_t len = nl_table.size();
    int k = 0;
    while ((std::size_t(1) << k) < len) ++k;
    if ((std::size_t(1) << k) != len || len < 2)
      throw DomainError("table length must be a power of two >= 2");
    FunctionTable f(2, k);
    for (std::size_t i = 0; i < len; ++i) {
      if (nl_table[i] != '0' && nl_table[i] != '1') throw DomainError("table must be 0/1 digits");
      f.set(i, static_cast<Elem>(nl_table[i] - '0'));
    }
    std::cout << walsh_nonlinearity(f) << "\n";
  });

  // ---- post-class ----
  auto* pc = app.add_subcommand("post-class", "Post maximal-clone membership (order 2)");
  std::string pc_alg;
  pc->add_option("--algebra", pc_alg)->required();
  pc->callback([&] {
    FiniteAlgebra alg = load_algebra(pc_alg);
    if (alg.size() != 2) throw DomainError("post-class: order-2 algebras only");
    for (std::size_t i = 0; i < alg.op_count(); ++i) {
      PostClasses c = post_classes(alg.table(i));
      std::cout << alg.symbol(i).name << " P0=" << c.preserves_zero << " P1=" << c.preserves_one
                << " M=" << c.monotone << " D=" << c.self_dual << " A=" << c.affine << "\n";
    }
    PrimalityVerdict v = is_primal(alg);
    std::cout << "primal "
              << (v.status == PrimalStatus::Primal
                      ? "yes"
                      : v.status == PrimalStatus::NotPrimal ? "no" : "unknown");
    if (!v.post_witness.empty()) {
      std::cout << " (inside";
      for (const auto& w : v.post_witness) std::cout << " " << w;
      std::cout << ")";
    }
    std::cout << "\n";
  });

  // ---- scan-order2 ----
  auto* scan = app.add_subcommand("scan-order2", "CSV scan of the 16 order-two groupoids");
  int scan_k = 4;
  scan->add_option("--arity", scan_k, "max spectrum arity (<= 4)")->check(CLI::Range(1, 4));
  scan->callback([&] {
    std::cout << "index,table,class,primal,post,spectrum";
    for (int k = 1; k <= scan_k; ++k) std::cout << ",spec_k" << k;
    std::cout << ",prim1,prim2\n";
    for (int idx = 0; idx < 16; ++idx) {
      FiniteAlgebra alg = make_groupoid2(idx);
      const FunctionTable& t = alg.table(0);
      PostClasses c = post_classes(t);
      PrimalityVerdict v = is_primal(alg);
      std::string post;
      if (c.preserves_zero) post += "P0 ";
      if (c.preserves_one) post += "P1 ";
      if (c.monotone) post += "M ";
      if (c.self_dual) post += "D ";
      if (c.affine) post += "A ";
      if (!post.empty()) post.pop_back();
      std::string cls = groupoid2_class(idx);
      std::cout << idx << ",\"" << table_string(t) << "\"," << cls << ","
                << (v.status == PrimalStatus::Primal ? "primal" : "not-primal") << ",\"" << post
                << "\"," << (cls == "unknown" ? "prefix-only" : "classified");
      for (int k = 1; k <= scan_k; ++k) {
        SpectrumReport rep = pspec_at(alg, k);
        std::cout << ",\"" << values_string(rep.values) << "\"";
      }
      std::cout << "," << prim_at(alg, 1).prim_k << "," << prim_at(alg, 2).prim_k << "\n";
    }
  });

  // ---- check ----
  auto* check = app.add_subcommand("check", "Named property suites");
  std::string suite;
  unsigned check_seed = 0;
  int check_k = 3;
  std::uint64_t check_budget = 4096;
  check->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"orbit-inclusion", "product-law", "barrier", "quadrilateral"}));
  check->add_option("--seed", check_seed, "corpus seed");
  check->add_option("--arity", check_k, "max arity for orbit-inclusion");
  check->add_option("--budget", check_budget, "clone budget for the order-3 corpus");
  check->callback([&] {
    CheckState st;
    if (suite == "orbit-inclusion") check_orbit_inclusion_suite(st, check_seed, check_k, check_budget);
    if (suite == "product-law") check_product_law_suite(st, check_seed);
    if (suite == "barrier") check_barrier_suite(st);
    if (suite == "quadrilateral") check_quadrilateral_suite(st);
    if (st.failures > 0) {
      std::cerr << st.failures << " check(s) failed\n";
      std::exit(kExitCheckFailed);
    }
  });

  // ---- lattice-search ----
  auto* ls = app.add_subcommand("lattice-search", "6-element bounded lattices and Pr(x^y=0)");
  ls->callback([&] {
    auto all = lattice_search_6();
    std::cout << "lattices " << all.size() << "\n";
    for (const auto& c : all) {
      std::cout << c.meet_zero_prob << " key " << c.canonical_key << " meet \""
                << table_string(c.algebra.table(*c.algebra.op_index("meet"))) << "\"\n";
    }
    auto hits = lattices_realizing(all, Rational(13, 36));
    std::cout << "realizing 13/36: " << hits.size() << "\n";
    for (const auto& d : known_discrepancies())
      std::cout << "discrepancy " << d.id << " computed " << d.computed << " quoted " << d.quoted
                << "\n";
  });

  app.require_subcommand(1);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ualab: finite universal-algebra laboratory"};
  dispatch(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::stringstream out, err;
    int code = app.exit(e, out, err);
    std::cout << out.str();
    std::cerr << err.str();
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ualab::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
