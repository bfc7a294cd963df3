// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Timings are printed for information only and never asserted.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ualab/ualab.hpp"

using namespace ualab;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> run;
};

bool require(bool cond, std::string& why, const std::string& msg) {
  if (!cond && why.empty()) why = msg;
  return cond;
}

std::vector<Rational> dyadic_ladder(int k) {
  std::vector<Rational> v;
  std::size_t den = pow_size(2, k);
  for (std::size_t d = 0; d <= den; ++d)
    v.push_back(Rational(BigInt(d), BigInt(den)));
  return v;
}

bool has_value(const std::vector<Rational>& vals, const Rational& x) {
  return std::count(vals.begin(), vals.end(), x) > 0;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "meet-zero probability and its product powers", [](std::string& why) {
    FiniteAlgebra b2 = make_boolean2();
    Equation eq = parse_equation("(= (meet x0 x1) (zero))", b2);
    bool ok = require(equation_probability(b2, eq) == Rational(3, 4), why, "base value != 3/4");
    FiniteAlgebra power = b2;
    Rational expect(3, 4);
    for (int m = 2; m <= 3; ++m) {
      power = direct_product(power, b2);
      expect = expect * Rational(3, 4);
      ok &= require(equation_probability(power, eq) == expect, why,
                    "power " + std::to_string(m) + " != (3/4)^m");
    }
    return ok;
  }});

  criteria.push_back({2, "prime cyclic spectra are two-valued; Z4 is not", [](std::string& why) {
    bool ok = true;
    for (int p : {2, 3, 5})
      for (int k = 1; k <= 3; ++k) {
        SpectrumReport rep = pspec_at(make_zp(p), k);
        ok &= require(rep.complete && rep.values == zp_spectrum(p), why,
                      "zp:" + std::to_string(p) + " k=" + std::to_string(k));
      }
    ok &= require(has_value(pspec_at(make_zn(4), 2).values, Rational(1, 2)), why,
                  "Z4 spectrum misses 1/2");
    return ok;
  }});

  criteria.push_back({3, "primal order-2 algebras have full dyadic spectra", [](std::string& why) {
    bool ok = true;
    for (const char* key : {"boolean2", "nand"})
      for (int k = 1; k <= 3; ++k) {
        SpectrumReport rep = pspec_at(builtin_algebra(key), k);
        ok &= require(rep.complete && rep.values == dyadic_ladder(k), why,
                      std::string(key) + " k=" + std::to_string(k) + " not the full ladder");
      }
    return ok;
  }});

  criteria.push_back({4, "order-2 groupoid spectrum table by class", [](std::string& why) {
    bool ok = true;
    std::vector<Rational> half_one = {Rational(1, 2), Rational(1)};
    std::vector<Rational> neg_row = {Rational(0), Rational(1, 2), Rational(1)};
    std::set<Rational> phi;
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 4; ++q)
        for (int r = 0; r <= 4; ++r)
          if (p + q + r <= 5) phi.insert(c2_phi(p, q, r));
    for (int idx = 0; idx < 16; ++idx) {
      std::string cls = groupoid2_class(idx);
      for (int k = 1; k <= 4; ++k) {
        SpectrumReport rep = pspec_at(make_groupoid2(idx), k);
        if (!rep.complete) {
          ok = require(false, why, "incomplete clone for index " + std::to_string(idx));
          continue;
        }
        std::string tag = "index " + std::to_string(idx) + " k=" + std::to_string(k);
        if (cls == "projection" && k == 1) {
          // the unary clone is {x} alone, so only full coincidence occurs
          ok &= require(rep.values == std::vector<Rational>{Rational(1)}, why,
                        tag + ": expected {1}");
        } else if (cls == "constant" || cls == "projection" || cls == "xor") {
          ok &= require(rep.values == half_one, why, tag + ": expected {1/2, 1}");
        } else if (cls == "negation") {
          // at k = 1 the clone is {x, not x}, which only meet in 0 points
          std::vector<Rational> want =
              k == 1 ? std::vector<Rational>{Rational(0), Rational(1)} : neg_row;
          ok &= require(rep.values == want, why, tag + ": negation row");
        } else if (cls == "and-or") {
          bool inside = true;
          for (const Rational& v : rep.values) inside &= phi.count(v) > 0;
          ok &= require(inside, why, tag + ": value outside the phi set");
          if (k >= 2)
            ok &= require(has_value(rep.values, Rational(1, 2)) &&
                              has_value(rep.values, Rational(3, 4)),
                          why, tag + ": missing 1/2 or 3/4");
        } else if (cls == "dyadic") {
          ok &= require(rep.values == dyadic_ladder(k), why, tag + ": not the dyadic ladder");
        } else {  // implication-type rows: report only, the slice is open
          if (k <= 3 && idx == 13) {
            std::ostringstream line;
            line << "  note: implication spectrum prefix k=" << k << ":";
            for (const Rational& v : rep.values) line << ' ' << v.str();
            std::puts(line.str().c_str());
          }
          ok &= require(has_value(rep.values, Rational(1)) && !has_value(rep.values, Rational(0)),
                        why, tag + ": implication row sanity");
        }
        if (k == 4 && cls == "unknown") continue;
      }
    }
    return ok;
  }});

  criteria.push_back({5, "semilattice family formula against brute force", [](std::string& why) {
    bool ok = true;
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q)
        for (int r = 0; r <= 3; ++r)
          ok &= require(c2_phi(p, q, r) == c2_brute(p, q, r), why,
                        "phi mismatch at (" + std::to_string(p) + "," + std::to_string(q) + "," +
                            std::to_string(r) + ")");
    FiniteAlgebra c2 = make_c2();
    Equation inst = parse_equation("(= (mul x0 x1) (mul x0 x2))", c2, 3);
    ok &= require(equation_probability(c2, inst) == c2_phi(1, 1, 1), why,
                  "worked instance != phi(1,1,1)");
    return ok;
  }});

  criteria.push_back({6, "S3 squared-product formula against brute force", [](std::string& why) {
    bool ok = true;
    for (int k = 1; k <= 4; ++k)
      ok &= require(s3_power_prob(k) == s3_brute(k), why, "k=" + std::to_string(k));
    FiniteAlgebra s3 = make_s3();
    ok &= require(equation_probability(s3, parse_equation("(= (mul x0 x0) (e))", s3)) ==
                      Rational(2, 3),
                  why, "k=1 worked value != 2/3");
    return ok;
  }});

  criteria.push_back({7, "modular lattice orbit counts and subset-sum bounds", [](std::string& why) {
    bool ok = true;
    for (int n : {3, 4}) {
      AutomorphismGroup g = automorphism_group(make_mn(n));
      std::size_t fact = 1;
      for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
      ok &= require(g.order() == fact, why, "Aut(M_" + std::to_string(n) + ") order");
    }
    OrbitPartition m3 = orbit_partition(automorphism_group(make_mn(3)), 2);
    std::vector<std::size_t> sizes = m3.sizes();
    std::sort(sizes.begin(), sizes.end());
    ok &= require(sizes == std::vector<std::size_t>{1, 1, 1, 1, 3, 3, 3, 3, 3, 6}, why,
                  "M3 orbit sizes");
    std::vector<Rational> bound = orbit_bound_at(make_mn(3), 2);
    ok &= require(bound.size() == 26, why, "M3 bound size");
    for (int d = 0; d <= 25 && ok; ++d)
      ok &= require(bound[static_cast<std::size_t>(d)] == Rational(d, 25), why, "M3 bound ladder");
    for (const Rational& v : orbit_bound_at(make_mn(6), 2))
      if (v.den() == 64)
        ok &= require(v.num() % 6 != 5, why, "M6 bound admits a forbidden numerator");
    return ok;
  }});

  criteria.push_back({8, "orbit bound contains the spectrum across the corpus", [](std::string& why) {
    bool ok = true;
    for (int idx = 0; idx < 16; ++idx)
      for (int k = 1; k <= 3; ++k) {
        OrbitInclusion inc = check_orbit_inclusion(make_groupoid2(idx), k);
        ok &= require(inc.holds, why,
                      "order-2 index " + std::to_string(idx) + " k=" + std::to_string(k));
        if (inc.equality_expected)
          ok &= require(inc.equality_holds, why,
                        "expected equality failed at index " + std::to_string(idx));
      }
    OrbitInclusion b2 = check_orbit_inclusion(make_boolean2(), 2);
    ok &= require(b2.holds && b2.equality_expected && b2.equality_holds, why, "boolean2 equality");
    std::mt19937 rng(0);
    for (int i = 0; i < 20; ++i) {
      FiniteAlgebra g = random_groupoid3(rng, "acc" + std::to_string(i));
      for (int k = 1; k <= 3; ++k) {
        OrbitInclusion inc = check_orbit_inclusion(g, k, /*clone_budget=*/4096);
        ok &= require(inc.holds, why, "seeded order-3 sample " + std::to_string(i));
      }
    }
    return ok;
  }});

  criteria.push_back({9, "quantitative primality of the affine clone", [](std::string& why) {
    FiniteAlgebra z2p = make_znplus(2);
    PrimReport p2 = prim_at(z2p, 2);
    PrimReport p4 = prim_at(z2p, 4);
    PrimReport p4x = prim_at_exhaustive(z2p, 4);
    bool ok = require(p2.prim_k == Rational(3, 4), why, "Prim_2 != 3/4");
    ok &= require(p4.prim_k == Rational(5, 8), why, "Prim_4 != 5/8");
    ok &= require(p2.method == PrimMethod::WalshHadamard &&
                      p4.method == PrimMethod::WalshHadamard,
                  why, "transform route not selected");
    ok &= require(p4.prim_k == p4x.prim_k && p4.covering_radius == p4x.covering_radius &&
                      p4.hardest == p4x.hardest,
                  why, "transform and exhaustive routes disagree");
    FunctionTable bent(2, 4);
    for (std::size_t i = 0; i < 16; ++i) {
      std::vector<Elem> t = index_tuple(i, 4, 2);
      bent.set(i, static_cast<Elem>((t[0] & t[1]) ^ (t[2] & t[3])));
    }
    ok &= require(walsh_nonlinearity(bent) == 6, why, "bent nonlinearity != 6");
    ok &= require(prim_at(make_v4(), 1).prim_k == Rational(0), why, "Prim_1(V4) != 0");
    ok &= require(prim_at(make_lattice2(), 1).prim_k == Rational(0), why,
                  "Prim_1(lattice2) != 0");
    return ok;
  }});

  criteria.push_back({10, "primality barrier for non-primal order-2 groupoids", [](std::string& why) {
    bool ok = true;
    for (int idx = 0; idx < 16; ++idx) {
      FiniteAlgebra g = make_groupoid2(idx);
      if (is_primal(g).status == PrimalStatus::Primal) continue;
      Rational p1 = prim_at(g, 1).prim_k;
      Rational p2 = prim_at(g, 2).prim_k;
      ok &= require(p1 <= Rational(1, 2) || p2 <= Rational(3, 4), why,
                    "barrier broken at index " + std::to_string(idx));
    }
    for (const char* key : {"or_xor", "and_xnor", "lattice01", "neg_xor3"})
      ok &= require(prim_at(builtin_algebra(key), 1).prim_k == Rational(1, 2), why,
                    std::string(key) + " Prim_1 != 1/2");
    FiniteAlgebra nand = make_groupoid2(14);
    ok &= require(is_primal(nand).status == PrimalStatus::Primal &&
                      is_primal_cardinality(nand).status == PrimalStatus::Primal,
                  why, "nand not primal by both methods");
    ok &= require(prim_at(nand, 1).prim_k == Rational(1), why, "nand Prim_1 != 1");
    return ok;
  }});

  criteria.push_back({11, "quadrilateral bound over computed pairs", [](std::string& why) {
    struct Case { const char* key; int k; };
    bool ok = true;
    for (Case c : {Case{"boolean2", 2}, Case{"z2plus", 3}, Case{"lattice2", 2}, Case{"zp:3", 2},
                   Case{"nand", 2}, Case{"groupoid2:6", 2}}) {
      FiniteAlgebra alg = builtin_algebra(c.key);
      PrimReport prim = prim_at(alg, c.k);
      SpectrumReport spec = pspec_at(alg, c.k);
      if (prim.prim_k == Rational(1)) {
        ok &= require(spec.values.size() == pow_size(alg.size(), c.k) + 1, why,
                      std::string(c.key) + ": primal but spectrum not full");
      } else {
        ok &= require(BigInt(spec.values.size()) >= quadrilateral_bound(prim.prim_k), why,
                      std::string(c.key) + ": spectrum smaller than the bound");
      }
    }
    return ok;
  }});

  criteria.push_back({12, "elementary lemma: product, mono, epi, kappa suites", [](std::string& why) {
    bool ok = true;
    std::mt19937 rng(12);
    for (int i = 0; i < 20; ++i) {
      FiniteAlgebra a = random_groupoid3(rng, "pa" + std::to_string(i));
      FiniteAlgebra b = random_groupoid3(rng, "pb" + std::to_string(i));
      Equation eq = random_equation(rng, a, 2, 3);
      ok &= require(lemma_product_check(eq, a, b).holds, why,
                    "product identity failed at sample " + std::to_string(i));
    }
    // mono: generated subalgebras of random order-4 groupoids
    std::uniform_int_distribution<int> pick(0, 3);
    int mono_checked = 0;
    for (int i = 0; i < 120 && mono_checked < 20; ++i) {
      FiniteAlgebra parent("mp" + std::to_string(i), 4);
      FunctionTable t(4, 2);
      for (std::size_t e = 0; e < 16; ++e) t.set(e, static_cast<Elem>(pick(rng)));
      parent.add_op("mul", t);
      std::vector<Elem> universe = subalgebra_closure(parent, {static_cast<Elem>(pick(rng))});
      if (universe.size() == 4) continue;
      InducedSubalgebra sub = induced_subalgebra(parent, universe, "ms" + std::to_string(i));
      AlgebraMap inc{&sub.algebra, &parent, sub.inclusion};
      Equation eq = random_equation(rng, parent, 2, 3);
      ok &= require(lemma_elementary_check(LemmaKind::Mono, eq, inc).holds, why,
                    "mono inequality failed at sample " + std::to_string(i));
      ++mono_checked;
    }
    ok &= require(mono_checked >= 10, why, "too few proper subalgebra samples");
    // epi: first projections of direct products
    for (int i = 0; i < 10; ++i) {
      FiniteAlgebra a = random_groupoid3(rng, "qa" + std::to_string(i));
      FiniteAlgebra b = random_groupoid3(rng, "qb" + std::to_string(i));
      FiniteAlgebra prod = direct_product(a, b);
      std::vector<Elem> m(9);
      for (int e = 0; e < 9; ++e) m[static_cast<std::size_t>(e)] = static_cast<Elem>(e / 3);
      AlgebraMap proj{&prod, &a, m};
      Equation eq = random_equation(rng, a, 2, 3);
      ok &= require(lemma_elementary_check(LemmaKind::Epi, eq, proj).holds, why,
                    "epi inequality failed at sample " + std::to_string(i));
    }
    // kappa: group quotients (the refinement is not a theorem of constant
    // fibers alone; a lattice projection violates it)
    FiniteAlgebra z4 = make_zn(4);
    FiniteAlgebra z2 = make_zn(2);
    AlgebraMap mod2{&z4, &z2, {0, 1, 0, 1}};
    FiniteAlgebra z6 = make_zn(6);
    FiniteAlgebra z3 = make_zn(3);
    AlgebraMap mod3{&z6, &z3, {0, 1, 2, 0, 1, 2}};
    for (int i = 0; i < 10; ++i) {
      ok &= require(
          lemma_elementary_check(LemmaKind::Kappa, random_equation(rng, z4, 2, 3), mod2).holds,
          why, "kappa failed on the Z4 quotient");
      ok &= require(
          lemma_elementary_check(LemmaKind::Kappa, random_equation(rng, z6, 2, 2), mod3).holds,
          why, "kappa failed on the Z6 quotient");
    }
    // the worked Boolean instance
    FiniteAlgebra b2 = make_boolean2();
    FiniteAlgebra b4 = direct_product(b2, b2);
    std::vector<Elem> pm = {0, 0, 1, 1};
    AlgebraMap bproj{&b4, &b2, pm};
    Equation meetzero = parse_equation("(= (meet x0 x1) (zero))", b2);
    LemmaResult kr = lemma_elementary_check(LemmaKind::Kappa, meetzero, bproj);
    ok &= require(kr.holds && kr.lhs == Rational(9, 16), why, "worked kappa instance");
    return ok;
  }});

  criteria.push_back({13, "lattice values, the discrepancy ledger, and the census", [](std::string& why) {
    FiniteAlgebra n5 = make_pentagon();
    FiniteAlgebra fl2 = make_fl2();
    bool ok = require(
        equation_probability(n5, parse_equation("(= (meet x0 x1) (zero))", n5)) == Rational(13, 25),
        why, "pentagon value != 13/25");
    ok &= require(equation_probability(fl2, parse_equation("(= (meet x0 x1) (zero))", fl2)) ==
                      Rational(11, 36),
                  why, "fl2 value != 11/36");
    std::vector<Discrepancy> ds = known_discrepancies();
    bool has_n5 = false, has_fl = false;
    for (const Discrepancy& d : ds) {
      if (d.id == "pentagon-meet-zero") has_n5 = d.computed == "13/25" && d.quoted == "14/25";
      if (d.id == "fl2-meet-zero") has_fl = d.computed == "11/36" && d.quoted == "13/36";
    }
    ok &= require(has_n5 && has_fl, why, "discrepancy ledger incomplete");
    std::vector<LatticeCandidate> all = lattice_search_6();
    ok &= require(all.size() == 15, why, "6-element census size != 15");
    ok &= require(lattices_realizing(all, Rational(13, 36)).size() == 1, why,
                  "13/36 realized by != 1 class");
    ok &= require(lattices_realizing(all, Rational(11, 36)).size() >= 1, why,
                  "11/36 not realized");
    return ok;
  }});

  int failures = 0;
  for (Criterion& c : criteria) {
    std::string why;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok) {
      std::printf("PASS criterion %d: %s (%.2fs)\n", c.id, c.title.c_str(), secs);
    } else {
      std::printf("FAIL criterion %d: %s (%.2fs) -- %s\n", c.id, c.title.c_str(), secs,
                  why.empty() ? "unspecified" : why.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
