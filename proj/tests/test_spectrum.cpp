#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "ualab/builtins.hpp"
#include "ualab/spectrum.hpp"

using namespace ualab;

namespace {

bool subset(const std::vector<Rational>& small, const std::vector<Rational>& big) {
  std::set<Rational> b(big.begin(), big.end());
  return std::all_of(small.begin(), small.end(), [&](const Rational& v) { return b.count(v) > 0; });
}

}  // namespace

TEST_CASE("equation probabilities of the worked examples") {
  FiniteAlgebra b2 = make_boolean2();
  CHECK(equation_probability(b2, parse_equation("(= (meet x0 x1) (zero))", b2)) == Rational(3, 4));

  FiniteAlgebra z3 = make_zp(3);
  CHECK(equation_probability(z3, parse_equation("(= (add x0 x1) (e))", z3)) == Rational(1, 3));

  FiniteAlgebra s3 = make_s3();
  CHECK(equation_probability(s3, parse_equation("(= (mul x0 x0) (e))", s3)) == Rational(2, 3));

  FiniteAlgebra n5 = make_pentagon();
  CHECK(equation_probability(n5, parse_equation("(= (meet x0 x1) (zero))", n5)) == Rational(13, 25));

  FiniteAlgebra fl2 = make_fl2();
  CHECK(equation_probability(fl2, parse_equation("(= (meet x0 x1) (zero))", fl2)) == Rational(11, 36));
}

TEST_CASE("spectrum slices of the worked examples") {
  SpectrumReport b2 = pspec_at(make_boolean2(), 2);
  CHECK(b2.complete);
  CHECK(b2.values == std::vector<Rational>{Rational(0), Rational(1, 4), Rational(1, 2),
                                           Rational(3, 4), Rational(1)});
  CHECK(b2.pair_count == 16u * 17u / 2u);

  CHECK(pspec_at(make_zp(3), 2).values == std::vector<Rational>{Rational(1, 3), Rational(1)});
  CHECK(pspec_at(make_pn(2), 3).values == std::vector<Rational>{Rational(1, 2), Rational(1)});

  // Z4 contrast: x + x = 0 has probability 1/2, impossible for Z_p
  std::vector<Rational> z4 = pspec_at(make_zn(4), 2).values;
  CHECK(std::count(z4.begin(), z4.end(), Rational(1, 2)) == 1);
}

TEST_CASE("spectrum invariants: membership, n-adic form, monotonicity") {
  for (const char* key : {"boolean2", "zp:3", "c2", "groupoid2:6", "pn:2"}) {
    FiniteAlgebra alg = builtin_algebra(key);
    std::vector<Rational> prev;
    for (int k = 1; k <= 3; ++k) {
      SpectrumReport rep = pspec_at(alg, k);
      REQUIRE(rep.complete);
      // 1 is always present; all values are d / n^k
      CHECK(std::count(rep.values.begin(), rep.values.end(), Rational(1)) == 1);
      BigInt nk(pow_size(alg.size(), k));
      for (const Rational& v : rep.values) {
        CHECK(v >= Rational(0));
        CHECK(v <= Rational(1));
        CHECK(nk % v.den() == 0);
      }
      if (k >= 2) {
        CHECK(std::count(rep.values.begin(), rep.values.end(), Rational(1, alg.size())) == 1);
        CHECK(subset(prev, rep.values));  // arity monotonicity
      }
      prev = rep.values;
    }
  }
}

TEST_CASE("zero in the unary spectrum iff no idempotent element") {
  for (int idx = 0; idx < 16; ++idx) {
    FiniteAlgebra g = make_groupoid2(idx);
    const FunctionTable& op = g.table(0);
    bool idempotent = op({0, 0}) == 0 || op({1, 1}) == 1;
    std::vector<Rational> vals = pspec_at(g, 1).values;
    bool has_zero = std::count(vals.begin(), vals.end(), Rational(0)) > 0;
    CHECK(has_zero == !idempotent);
  }
}

TEST_CASE("direct products and the power law") {
  FiniteAlgebra b2 = make_boolean2();
  FiniteAlgebra b4 = direct_product(b2, b2);
  CHECK(b4.size() == 4);
  Equation eq = parse_equation("(= (meet x0 x1) (zero))", b2);
  CHECK(equation_probability(b4, eq) == Rational(9, 16));
  FiniteAlgebra b8 = direct_product(b4, b2);
  CHECK(equation_probability(b8, eq) == Rational(27, 64));

  for (const char* key : {"boolean2", "zp:3"}) {
    FiniteAlgebra a = builtin_algebra(key);
    FiniteAlgebra sq = direct_product(a, a);
    for (int k = 1; k <= 2; ++k) {
      std::vector<Rational> base = pspec_at(a, k).values;
      std::vector<Rational> squared;
      for (const Rational& v : base) squared.push_back(v * v);
      std::sort(squared.begin(), squared.end());
      CHECK(pspec_at(sq, k).values == squared);
    }
  }

  CHECK_THROWS_AS(direct_product(make_boolean2(), make_c2()), DomainError);
}

TEST_CASE("clone monotonicity transfers to spectra for reduct pairs") {
  // lattice2 is a reduct of boolean2; c2 embeds its meet fragment
  for (int k = 1; k <= 2; ++k) {
    CHECK(subset(pspec_at(make_lattice2(), k).values, pspec_at(make_boolean2(), k).values));
    CHECK(subset(pspec_at(make_c2(), k).values, pspec_at(make_lattice2(), k).values));
    CHECK(subset(pspec_at(make_znrho(2), k).values, pspec_at(make_znplus(2), k).values));
  }
}

TEST_CASE("orbit inclusion holds for the corpus and is equality when expected") {
  OrbitInclusion b2 = check_orbit_inclusion(make_boolean2(), 2);
  CHECK(b2.holds);
  CHECK(b2.equality_expected);
  CHECK(b2.equality_holds);

  OrbitInclusion z3 = check_orbit_inclusion(make_zp(3), 1);
  CHECK(z3.holds);
  CHECK(z3.strict);
  CHECK_FALSE(z3.equality_expected);  // Fix(Z3) = {0} only

  OrbitInclusion m3 = check_orbit_inclusion(make_mn(3), 2);
  CHECK(m3.holds);

  for (int idx = 0; idx < 16; ++idx)
    for (int k = 1; k <= 3; ++k) {
      OrbitInclusion inc = check_orbit_inclusion(make_groupoid2(idx), k);
      CHECK(inc.holds);
      if (inc.equality_expected) CHECK(inc.equality_holds);
    }

  std::mt19937 rng(0);
  for (int i = 0; i < 20; ++i) {
    FiniteAlgebra g = random_groupoid3(rng, "r" + std::to_string(i));
    for (int k = 1; k <= 3; ++k) {
      // order-3 closures may overrun the reduced budget: partial spectra
      // are still genuine subsets of the true slice, so inclusion applies
      OrbitInclusion inc = check_orbit_inclusion(g, k, /*clone_budget=*/4096);
      CHECK(inc.holds);
    }
  }
}

TEST_CASE("thread count does not change spectrum output") {
  std::mt19937 rng(3);
  FiniteAlgebra g = random_groupoid3(rng, "threaded");
  CloneSet clone = generate_clone(g, 3, 4096);
  SpectrumReport one = pspec_from_clone(g.name(), clone, 1);
  SpectrumReport four = pspec_from_clone(g.name(), clone, 4);
  CHECK(one.values == four.values);
  CHECK(one.pair_count == four.pair_count);
}
