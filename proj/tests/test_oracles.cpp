#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "ualab/approx.hpp"
#include "ualab/builtins.hpp"
#include "ualab/lattice_search.hpp"
#include "ualab/spectrum.hpp"

using namespace ualab;

TEST_CASE("semilattice closed form phi agrees with brute force") {
  CHECK(c2_phi(1, 1, 1) == Rational(3, 4));
  CHECK(c2_phi(0, 0, 0) == Rational(1));
  CHECK(c2_phi(2, 2, 0) == Rational(5, 8));
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      for (int r = 0; r <= 3; ++r) CHECK(c2_phi(p, q, r) == c2_brute(p, q, r));
  CHECK_THROWS_AS(c2_phi(-1, 0, 0), DomainError);
}

TEST_CASE("S3 squared-product closed form agrees with brute force") {
  CHECK(s3_power_prob(1) == Rational(2, 3));
  for (int k = 1; k <= 4; ++k) CHECK(s3_power_prob(k) == s3_brute(k));
  CHECK_THROWS_AS(s3_power_prob(0), DomainError);
}

TEST_CASE("prime cyclic group spectra match the closed form") {
  for (int p : {2, 3, 5})
    for (int k = 1; k <= 3; ++k) CHECK(pspec_at(make_zp(p), k).values == zp_spectrum(p));
  CHECK_THROWS_AS(zp_spectrum(4), DomainError);
}

TEST_CASE("M_n orbit closed form matches the computed partition") {
  for (int n : {3, 4, 6}) {
    OrbitPartition part = orbit_partition(automorphism_group(make_mn(n)), 2);
    std::vector<std::size_t> got = part.sizes();
    std::vector<std::size_t> want = mn_orbit_sizes(n);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("affine primality closed form matches the computed values") {
  for (int k : {2, 4}) CHECK(affine_prim(k) == prim_at(make_znplus(2), k).prim_k);
  CHECK_THROWS_AS(affine_prim(3), DomainError);
  CHECK_THROWS_AS(affine_prim(0), DomainError);
}

TEST_CASE("quadrilateral bound values") {
  CHECK(quadrilateral_bound(Rational(3, 4)) == 1);
  CHECK(quadrilateral_bound(Rational(7, 8)) == 2);
  CHECK(quadrilateral_bound(Rational(0)) == 0);
  CHECK_THROWS_AS(quadrilateral_bound(Rational(1)), DomainError);
}

TEST_CASE("builtin key resolution and failure modes") {
  CHECK(builtin_algebra("zp:5").size() == 5);
  CHECK(builtin_algebra("nand").name() == builtin_algebra("groupoid2:14").name());
  CHECK_THROWS_AS(builtin_algebra("nosuch"), DomainError);
  CHECK_THROWS_AS(builtin_algebra("zp:4"), DomainError);
  CHECK_THROWS_AS(builtin_algebra("groupoid2:16"), DomainError);
  CHECK_THROWS_AS(builtin_algebra("zp"), DomainError);  // missing parameter
}

TEST_CASE("constants and a generating cycle span the same clone for Z3") {
  // the nullary enrichment and the rho enrichment generate the same
  // term operations over Z3 at small arities
  for (int k = 1; k <= 2; ++k) {
    CloneSet a = generate_clone(make_znplus(3), k);
    CloneSet b = generate_clone(make_znrho(3), k);
    REQUIRE(a.complete);
    REQUIRE(b.complete);
    CHECK(a.tables == b.tables);
  }
}

TEST_CASE("recorded discrepancies match what the engine computes") {
  std::vector<Discrepancy> ds = known_discrepancies();
  REQUIRE(ds.size() == 2);

  auto find = [&](const std::string& id) {
    auto it = std::find_if(ds.begin(), ds.end(), [&](const Discrepancy& d) { return d.id == id; });
    REQUIRE(it != ds.end());
    return *it;
  };

  Discrepancy n5 = find("pentagon-meet-zero");
  FiniteAlgebra pent = make_pentagon();
  CHECK(equation_probability(pent, parse_equation("(= (meet x0 x1) (zero))", pent)).str() ==
        n5.computed);
  CHECK(n5.quoted == "14/25");

  Discrepancy fl = find("fl2-meet-zero");
  FiniteAlgebra fl2 = make_fl2();
  CHECK(equation_probability(fl2, parse_equation("(= (meet x0 x1) (zero))", fl2)).str() ==
        fl.computed);
  CHECK(fl.quoted == "13/36");
}

TEST_CASE("six-element bounded lattice census") {
  std::vector<LatticeCandidate> all = lattice_search_6();
  CHECK(all.size() == 15);
  // keys are pairwise distinct (isomorphism classes)
  std::set<std::uint64_t> keys;
  for (const auto& c : all) keys.insert(c.canonical_key);
  CHECK(keys.size() == all.size());
  // each candidate really is a bounded lattice realizing its probability
  for (const auto& c : all) {
    Equation eq = parse_equation("(= (meet x0 x1) (zero))", c.algebra);
    CHECK(equation_probability(c.algebra, eq) == c.meet_zero_prob);
  }
  // the free-distributive value 11/36 appears; exactly one class hits 13/36
  CHECK(lattices_realizing(all, Rational(11, 36)).size() >= 1);
  CHECK(lattices_realizing(all, Rational(13, 36)).size() == 1);
}

TEST_CASE("order-two groupoid classification covers all sixteen") {
  std::set<std::string> seen;
  for (int idx = 0; idx < 16; ++idx) seen.insert(groupoid2_class(idx));
  CHECK(seen == std::set<std::string>{"constant", "projection", "xor", "and-or", "negation",
                                      "dyadic", "unknown"});
  CHECK(groupoid2_class(6) == "xor");
  CHECK(groupoid2_class(14) == "dyadic");
  CHECK(groupoid2_class(13) == "unknown");  // implication
}
