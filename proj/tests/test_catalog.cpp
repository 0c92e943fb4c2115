#include <doctest.h>

#include <random>

#include "dz/catalog.hpp"
#include "dz/permmap.hpp"
#include "dz/verify.hpp"

using namespace dz;

TEST_CASE("catalog_get returns the printed data") {
  const auto& K = catalog::get("K");
  CHECK(K.P == Poly({Rat(1), Rat(-5), Rat(1)}).pow(3) *
                   Poly({Rat(49), Rat(-13), Rat(1)}));
  CHECK(K.R == Poly({Rat(0), Rat(-1728)}));

  const auto& Q = catalog::get("Q");
  CHECK(Q.R == Poly::constant(Rat(-64L * 531441)));  // -2^6 3^12

  const auto& elkies = catalog::get("elkies_d");
  CHECK(elkies.R.degree() == 6);
  CHECK(elkies.R.coeff(6) == Rat(64) * Rat(14348907) * Rat(5));  // 2^6 3^15 * 5
  CHECK_THROWS_AS(catalog::get("nonexistent"), std::out_of_range);
}

TEST_CASE("verify_all passes every entry") {
  auto lines = catalog::verify_all();
  CHECK(lines.size() >= 24);
  for (const auto& l : lines) {
    INFO(l.name, ": ", l.report.text());
    CHECK(l.pass);
  }
  // tree T line reports degree 5 with leading factor -2^38 * 3^3
  for (const auto& l : lines)
    if (l.name == "T") {
      CHECK(l.degR == 5);
      const auto& T = catalog::get("T");
      CHECK(T.R.leading() == Rat(mpz_class("-7421703487488")));  // -2^38*3^3
    }
  // tree M reports the printed R
  const auto& M = catalog::get("M");
  CHECK(M.R == Rat(-64L * 531441) * Poly({Rat(324), Rat(-28), Rat(1)}));
  // relaxed entries are flagged non-minimal with the right degree gaps
  for (const auto& l : lines) {
    if (l.name == "relaxed_cubeS") {
      CHECK(l.relaxed);
      CHECK(l.report.degR_observed == 9);
      CHECK(l.report.degR_required == 8);
    }
    if (l.name == "relaxed_multR") {
      CHECK(l.relaxed);
      CHECK(l.report.degR_observed == 9);
      CHECK(l.report.degR_required == 7);
    }
  }
}

TEST_CASE("rational root factorizations printed for tree Q") {
  Poly cubic({Rat(16), Rat(15), Rat(0), Rat(1)});
  CHECK(cubic.divisible_by(Poly::linear(Rat(1), Rat(1))));
  Poly quintic({Rat(1872), Rat(384), Rat(64), Rat(39), Rat(0), Rat(1)});
  CHECK(quintic.divisible_by(Poly::linear(Rat(1), Rat(3))));
}

TEST_CASE("cube-square relation for the four cube/square entries") {
  for (const char* name : {"T", "N", "birch_a", "elkies_d"}) {
    const auto& e = catalog::get(name);
    // P = A^3, Q = B^2: recover A and B by profile structure
    auto prof = e.P.squarefree_profile();
    REQUIRE(prof.size() == 1);
    REQUIRE(prof.begin()->first == 3);
    // P = A^3 with A squarefree, so A = P / gcd(P, P'); likewise B from Q.
    Poly A = e.P.divmod(Poly::gcd(e.P, e.P.derivative())).first.monic();
    Poly B = e.Q.divmod(Poly::gcd(e.Q, e.Q.derivative())).first.monic();
    CHECK(A.pow(3).monic() == e.P.monic());
    CHECK(B.pow(2).monic() == e.Q.monic());
    auto c = check_cube_square_relation(A, B);
    REQUIRE_MESSAGE(c.has_value(), name);
    CHECK_FALSE(c->is_zero());
  }
}

TEST_CASE("power lifts connect catalog entries") {
  const auto& L = catalog::get("L");
  const auto& R = catalog::get("R");
  CHECK(L.P.substitute_power(2) == R.P);
  CHECK(L.Q.substitute_power(2) == R.Q);
  const auto& S = catalog::get("S");
  const auto& cubeS = catalog::get("relaxed_cubeS");
  CHECK(S.P.substitute_power(3) == cubeS.P);
  CHECK(S.Q.substitute_power(3) == cubeS.Q);
}

TEST_CASE("distinguished trees carry their invariants") {
  const auto& a = catalog::get("pgl27_a");
  REQUIRE(a.tree.has_value());
  CHECK(group_order(expand_to_map(*a.tree)) == 336);
  CHECK(a.tree->passport() == a.passport);

  const auto& b = catalog::get("pgl27_b");
  REQUIRE(b.tree.has_value());
  CHECK(group_order(expand_to_map(*b.tree)) == 336);

  const auto& sd = catalog::get("selfdual_2_5");
  REQUIRE(sd.tree.has_value());
  CHECK(is_self_dual(*sd.tree));

  const auto& sym = catalog::get("sym_62_32");
  REQUIRE(sym.tree.has_value());
  CHECK(sym.tree->symmetry_order() == 2);

  const auto& N = catalog::get("N");
  REQUIRE(N.tree.has_value());
  CHECK(N.tree->symmetry_order() == 3);

  const auto& K = catalog::get("K");
  REQUIRE(K.tree.has_value());
  CHECK(K.tree->symmetry_order() == 1);
}

TEST_CASE("metadata-only entries") {
  const auto& quintic = catalog::get("galois_71_quintic");
  CHECK(quintic.metadata_only);
  REQUIRE(quintic.field_polynomial.has_value());
  CHECK(*quintic.field_polynomial ==
        Poly({Rat(2560), Rat(2624), Rat(1040), Rat(209), Rat(22), Rat(1)}));
  const auto& cubic = catalog::get("galois_62_cubic");
  CHECK(*cubic.field_polynomial == Poly({Rat(16), Rat(-6), Rat(0), Rat(1)}));
}

TEST_CASE("generated entries verify against their passports") {
  const auto& s83 = catalog::get("bs_83_sym");
  CHECK(s83.generated);
  CHECK(s83.passport.str() == "8,8,8|3,3,3,3,3,3,3,3");
  const auto& s103a = catalog::get("bs_103_sym2");
  CHECK(s103a.passport.str() == "10,10,10|3,3,3,3,3,3,3,3,3,3");
  const auto& s103b = catalog::get("bs_103_sym3");
  CHECK(s103b.passport.str() == "10,10,10|3,3,3,3,3,3,3,3,3,3");
  // the three (10^3, 3^10) entries are pairwise distinct pairs
  CHECK(s103a.P != s103b.P);
  CHECK(catalog::get("bs_103_asym").P != s103a.P);
}

TEST_CASE("hist_T alias") {
  const auto& h = catalog::get("hist_T");
  const auto& T = catalog::get("T");
  CHECK(h.P == T.P);
  CHECK(h.notes.find("x^19") != std::string::npos);
}

TEST_CASE("mutation soundness on catalog pairs") {
  std::mt19937 rng(42);
  std::vector<std::string> names;
  for (const auto& n : catalog::names()) {
    const auto& e = catalog::get(n);
    if (!e.metadata_only && !e.relaxed) names.push_back(n);
  }
  int trials = 100;
  for (int i = 0; i < trials; ++i) {
    const auto& e = catalog::get(names[rng() % names.size()]);
    bool mutate_p = rng() % 2 == 0;
    const Poly& target = mutate_p ? e.P : e.Q;
    std::vector<Rat> c = target.coeffs();
    c[rng() % c.size()] += Rat(1);
    Poly mutated(c);
    if (mutated.degree() != (mutate_p ? e.Q : e.P).degree()) {
      // degree collision counts as a detected failure
      CHECK(true);
      continue;
    }
    DZReport rep = mutate_p ? check_dz(mutated, e.Q, e.passport)
                            : check_dz(e.P, mutated, e.passport);
    INFO(e.name, " mutation #", i);
    CHECK_FALSE(rep.pass());
  }
}
