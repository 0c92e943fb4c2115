#include <doctest.h>

#include "dz/specfun.hpp"

using namespace dz;

TEST_CASE("jacobi small cases") {
  CHECK(jacobi({0, Rat(7, 3), Rat(-9, 5)}) == Poly::one());
  CHECK(jacobi({1, Rat(0), Rat(0)}) == Poly::x());
  // leading coefficient of J_2(1/2, 1/2) is C(5,2)/4 = 5/2
  Poly j2 = jacobi({2, Rat(1, 2), Rat(1, 2)});
  CHECK(j2.degree() == 2);
  CHECK(j2.leading() == Rat(5, 2));
  CHECK(jacobi_leading({2, Rat(1, 2), Rat(1, 2)}) == Rat(5, 2));
}

TEST_CASE("jacobi satisfies its differential equation on a rational grid") {
  std::vector<Rat> grid = {Rat(0),     Rat(1, 2),  Rat(-1, 2), Rat(-3, 2), Rat(2),
                           Rat(-5, 2), Rat(1, 3),  Rat(-7, 3), Rat(-4),    Rat(5, 4)};
  for (int n = 0; n <= 8; ++n)
    for (size_t i = 0; i < grid.size(); ++i) {
      JacobiParams p{n, grid[i], grid[(i + 3) % grid.size()]};
      Poly y = jacobi(p);
      CHECK(jacobi_ode_residual(p, y).is_zero());
      CHECK(y.coeff(n) == jacobi_leading(p));
    }
}

TEST_CASE("degree drop exactly when a+b lies in the printed window") {
  // a+b in {-(n+1), ..., -2n}
  CHECK(jacobi_degree_drops({3, Rat(-2), Rat(-2)}));       // a+b = -4
  CHECK(jacobi_degree_drops({3, Rat(-1, 2), Rat(-11, 2)}));  // a+b = -6
  CHECK_FALSE(jacobi_degree_drops({3, Rat(-2), Rat(-5)}));   // a+b = -7
  CHECK_FALSE(jacobi_degree_drops({3, Rat(-1), Rat(-2)}));   // a+b = -3
  CHECK(jacobi({3, Rat(-2), Rat(-2)}).degree() < 3);
}

TEST_CASE("weight series") {
  Series w = weight_series(Rat(0), Rat(0), 4);
  CHECK(w == Series::one(4));
  Series geo = weight_series(Rat(-1), Rat(0), 3);
  for (int i = 0; i <= 3; ++i) CHECK(geo.coeff(i) == Rat(1));
  Series fl = weight_series(Rat(1), Rat(1), 2);
  CHECK(fl.coeff(0) == Rat(1));
  CHECK(fl.coeff(1) == Rat(0));
  CHECK(fl.coeff(2) == Rat(-1));
}

TEST_CASE("pade form of 1/(1-x)") {
  Series f = weight_series(Rat(-1), Rat(0), 1);
  PadeForm pf = pade_form(f, 0, 1);
  CHECK(pf.p == Poly::one());
  CHECK(pf.q == Poly({Rat(1), Rat(-1)}));
}

TEST_CASE("pade form [1/0] is plain truncation") {
  Series f = weight_series(Rat(-1), Rat(0), 1);
  PadeForm pf = pade_form(f, 1, 0);
  CHECK(pf.q == Poly::one());
  CHECK(pf.p == Poly({Rat(1), Rat(1)}));
}

TEST_CASE("pade residual is rechecked internally over a parameter grid") {
  for (Rat a : {Rat(1, 2), Rat(-3, 2), Rat(5, 3)})
    for (Rat b : {Rat(1, 2), Rat(7, 4)})
      for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
          Series f = weight_series(a, b, n + m);
          PadeForm pf = pade_form(f, n, m);  // throws if q f - p != O(x^{n+m+1})
          CHECK(!(pf.p.is_zero() && pf.q.is_zero()));
          CHECK(pf.p.degree() <= n);
          CHECK(pf.q.degree() <= m);
        }
}

TEST_CASE("pade form rejects short series") {
  Series f = weight_series(Rat(1, 2), Rat(1, 2), 2);
  CHECK_THROWS_AS(pade_form(f, 2, 2), std::invalid_argument);
}

TEST_CASE("residual of the weighted-Jacobi identity at infinity") {
  SUBCASE("identically zero case") {
    auto r = jacobi_infinity_residual({0, Rat(0), Rat(0)});
    CHECK_FALSE(r.residual_exponent.has_value());
    CHECK(r.bound_holds);
  }
  SUBCASE("n=1, a=b=1/2") {
    auto r = jacobi_infinity_residual({1, Rat(1, 2), Rat(1, 2)});
    REQUIRE(r.residual_exponent.has_value());
    CHECK(*r.residual_exponent <= -2);
    CHECK(r.bound_holds);
  }
  SUBCASE("n=2, a=3/2, b=1/2") {
    auto r = jacobi_infinity_residual({2, Rat(3, 2), Rat(1, 2)});
    REQUIRE(r.residual_exponent.has_value());
    CHECK(*r.residual_exponent <= -3);
    CHECK(r.bound_holds);
  }
  SUBCASE("grid with integral a+b") {
    std::vector<std::pair<Rat, Rat>> ab = {
        {Rat(1, 2), Rat(1, 2)},  {Rat(3, 2), Rat(1, 2)}, {Rat(1, 3), Rat(2, 3)},
        {Rat(-1, 2), Rat(3, 2)}, {Rat(5, 2), Rat(-1, 2)}, {Rat(-2, 3), Rat(2, 3)},
        {Rat(7, 4), Rat(1, 4)},  {Rat(-1, 4), Rat(5, 4)}, {Rat(4, 3), Rat(5, 3)},
        {Rat(-5, 3), Rat(2, 3)}};
    for (const auto& [a, b] : ab) {
      long e = (a + b).num().get_si();
      int nmin = e >= 0 ? 0 : static_cast<int>(-e);
      for (int n = nmin; n <= nmin + 2; ++n)
        CHECK(jacobi_infinity_residual({n, a, b}).bound_holds);
    }
  }
  SUBCASE("precondition violations") {
    CHECK_THROWS_AS(jacobi_infinity_residual({2, Rat(1, 2), Rat(1, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_infinity_residual({1, Rat(-3, 2), Rat(-3, 2)}), std::invalid_argument);
  }
}
