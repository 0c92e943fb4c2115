#include <doctest.h>

#include "dz/catalog.hpp"
#include "dz/seriesgen.hpp"
#include "dz/verify.hpp"

using namespace dz;

namespace {

Poly parse(std::initializer_list<long> asc) {
  std::vector<Rat> c;
  for (long v : asc) c.push_back(Rat(v));
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("check_dz on tree K") {
  const auto& K = catalog::get("K");
  DZReport rep = check_dz(K.P, K.Q);
  CHECK(rep.coprime);
  CHECK(rep.minimal);
  CHECK(rep.degR_observed == 1);
  CHECK(rep.alpha_observed.str() == "3,3,1,1");
  CHECK(rep.beta_observed.str() == "2,2,2,2");
  CHECK(rep.pass());
}

TEST_CASE("check_dz simple star case") {
  // x^3 vs x^3 - 1: n=3, p=1, q=3, required degree 0
  DZReport rep = check_dz(parse({0, 0, 0, 1}), parse({-1, 0, 0, 1}));
  CHECK(rep.minimal);
  CHECK(rep.p == 1);
  CHECK(rep.q == 3);
  CHECK(rep.degR_observed == 0);
}

TEST_CASE("check_dz rejects malformed input") {
  CHECK_THROWS_AS(check_dz(parse({0, 1}), parse({0, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(check_dz(Poly(), Poly()), std::invalid_argument);
  CHECK_THROWS_AS(check_dz(parse({2}), parse({3})), std::invalid_argument);
}

TEST_CASE("non-coprime pair is reported, not thrown") {
  DZReport rep = check_dz(parse({0, 0, 0, 1}), parse({0, 0, 0, 1}));
  CHECK_FALSE(rep.coprime);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("expected passport comparison") {
  const auto& K = catalog::get("K");
  DZReport good = check_dz(K.P, K.Q, Passport::parse("3,3,1,1|2,2,2,2"));
  CHECK(good.passport_match.value());
  DZReport bad = check_dz(K.P, K.Q, Passport::parse("4,2,1,1|2,2,2,2"));
  CHECK_FALSE(bad.passport_match.value());
  CHECK_FALSE(bad.pass());
}

TEST_CASE("relaxed cube of S against the cube-square passport") {
  const auto& e = catalog::get("relaxed_cubeS");
  DZReport rep = check_dz(e.P, e.Q, e.passport);
  CHECK(rep.coprime);
  CHECK(rep.degR_observed == 9);
  CHECK(rep.degR_required == 8);
  CHECK_FALSE(rep.minimal);
  CHECK_FALSE(rep.bound_violated);
}

TEST_CASE("reciprocal form agrees with minimality") {
  // tree T: P* - Q* divisible by x^19
  const auto& T = catalog::get("T");
  DZPair pair{T.P, T.Q, T.R, T.passport, "T"};
  CHECK(check_reciprocal_form(pair));
  int n = T.P.degree();
  Poly diff = T.P.reciprocal(n) - T.Q.reciprocal(n);
  CHECK(diff.valuation() == 19);

  // corrupting one coefficient breaks the divisibility (degree 20 reverses
  // to x^4, inside the x^19 window)
  std::vector<Rat> qc = T.Q.coeffs();
  qc[20] += Rat(1);
  DZPair bad{T.P, Poly(qc), T.P - Poly(qc), T.passport, "T corrupted"};
  CHECK_FALSE(check_reciprocal_form(bad));
}

TEST_CASE("reciprocal form for a series A output") {
  DZPair pr = gen::series_A(2, 3, 4);
  CHECK(check_reciprocal_form(pr));
}

TEST_CASE("check_dz and reciprocal form agree on catalog pairs") {
  for (const auto& name : catalog::names()) {
    const auto& e = catalog::get(name);
    if (e.metadata_only || e.relaxed) continue;
    if (e.P.coeff(0).is_zero() && e.Q.coeff(0).is_zero()) continue;
    DZReport rep = check_dz(e.P, e.Q);
    DZPair pair{e.P, e.Q, e.R, Passport(rep.alpha_observed, rep.beta_observed), name};
    CHECK(rep.minimal == check_reciprocal_form(pair));
  }
  // and the non-minimal direction: relaxed_multR misses the x^{p+q-1} window
  const auto& m = catalog::get("relaxed_multR");
  DZReport rep = check_dz(m.P, m.Q);
  DZPair pair{m.P, m.Q, m.R, Passport(rep.alpha_observed, rep.beta_observed),
              "relaxed_multR"};
  CHECK_FALSE(rep.minimal);
  CHECK_FALSE(check_reciprocal_form(pair));
}

TEST_CASE("cube-square differential relation") {
  // tree N: A = x^4 - 8x, B = x^6 - 12x^3 + 24
  Poly A = parse({0, -8, 0, 0, 1});
  Poly B = parse({24, 0, 0, -12, 0, 0, 1});
  auto c = check_cube_square_relation(A, B);
  REQUIRE(c.has_value());
  CHECK(*c == Rat(-576));

  // perturbation destroys the collapse
  Poly A2 = A + parse({1});
  CHECK_FALSE(check_cube_square_relation(A2, B).has_value());

  CHECK_THROWS_AS(check_cube_square_relation(parse({1, 1}), parse({1, 1})),
                  std::invalid_argument);
}

TEST_CASE("belyi critical point checks") {
  // f1 for k=3: (x^2-3)^3 / 27 (x^2-1), conditions at 0
  Poly num = Rat(1, 27) * parse({-3, 0, 1}).pow(3);
  Poly den = parse({-1, 0, 1});
  CHECK(check_belyi_critical(num, den, Rat(0), 3));
  // f = x at 0 with target 1 fails
  CHECK_FALSE(check_belyi_critical(parse({0, 1}), parse({1}), Rat(0), 0));
  CHECK_THROWS_AS(check_belyi_critical(parse({1}), parse({0, 1}), Rat(0), 1),
                  std::domain_error);
}
