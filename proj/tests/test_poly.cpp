#include <doctest.h>

#include <random>

#include "dz/poly.hpp"

using dz::Poly;
using dz::Rat;

namespace {

Poly parse(std::initializer_list<long> asc) {
  std::vector<Rat> c;
  for (long v : asc) c.push_back(Rat(v));
  return Poly(std::move(c));
}

std::mt19937 rng(20240811);

Poly random_poly(int max_deg, int max_coeff = 9) {
  std::uniform_int_distribution<int> dd(0, max_deg), cd(-max_coeff, max_coeff),
      nz(1, max_coeff);
  int d = dd(rng);
  std::vector<Rat> c(static_cast<size_t>(d) + 1);
  for (auto& v : c) v = Rat(cd(rng));
  c.back() = Rat(nz(rng));
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("rat basics") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(0, 5).str() == "0");
  CHECK(Rat::parse("-7/21") == Rat(-1, 3));
  CHECK(Rat::parse(" 5 ") == Rat(5));
  CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
  CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
}

TEST_CASE("degree and zero conventions") {
  Poly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == Poly::kNegInf);
  CHECK(parse({0, 0, 0}).is_zero());
  CHECK(parse({5}).degree() == 0);
  CHECK(Poly::monomial(Rat(1), 3).degree() == 3);
}

TEST_CASE("difference of squares") {
  Poly lhs = parse({1, 1}) * parse({-1, 1});
  CHECK(lhs == parse({-1, 0, 1}));
}

TEST_CASE("compose square with shift") {
  Poly y2 = Poly::monomial(Rat(1), 2);
  CHECK(y2.compose(parse({1, 1})) == parse({1, 2, 1}));
}

TEST_CASE("cube of a quadratic against repeated multiplication") {
  Poly f = parse({1, -5, 1});  // x^2 - 5x + 1
  Poly brute = f * f * f;
  CHECK(f.pow(3) == brute);
  // schoolbook expansion
  CHECK(brute == parse({1, -15, 78, -155, 78, -15, 1}));
}

TEST_CASE("reciprocal") {
  CHECK(parse({1, 2, 3}).reciprocal(2) == parse({3, 2, 1}));
  // padding case: x with declared degree 3 -> x^2
  CHECK(parse({0, 1}).reciprocal(3) == parse({0, 0, 1, 0}));
  CHECK_THROWS_AS(parse({1, 2, 3}).reciprocal(1), std::invalid_argument);
  // tree T inner octic
  Poly octic = parse({268777, 218864, 26884, 13536, 2366, 176, 84, 0, 1});
  Poly rec = octic.reciprocal(8);
  CHECK(rec == parse({1, 0, 84, 176, 2366, 13536, 26884, 218864, 268777}));
}

TEST_CASE("reciprocal involution property") {
  for (int i = 0; i < 50; ++i) {
    Poly p = random_poly(6);
    if (p.is_zero() || p.coeff(0).is_zero()) continue;
    int n = p.degree();
    CHECK(p.reciprocal(n).reciprocal(n) == p);
  }
}

TEST_CASE("gcd basics") {
  CHECK(Poly::gcd(parse({-1, 0, 1}), parse({-1, 1})) == parse({-1, 1}));
  CHECK(Poly::gcd(parse({0, 0, 1}), parse({0, 0, 2})) == parse({0, 0, 1}));
  CHECK_THROWS_AS(Poly::gcd(Poly(), Poly()), std::domain_error);
}

TEST_CASE("gcd divides both arguments") {
  for (int i = 0; i < 40; ++i) {
    Poly a = random_poly(5), b = random_poly(5);
    if (a.is_zero() && b.is_zero()) continue;
    Poly g = Poly::gcd(a, b);
    if (!a.is_zero()) CHECK(a.divisible_by(g));
    if (!b.is_zero()) CHECK(b.divisible_by(g));
  }
}

TEST_CASE("squarefree profile") {
  Poly p = parse({-1, 1}).pow(3) * parse({2, 1});
  auto prof = p.squarefree_profile();
  CHECK(prof == std::map<int, int>{{3, 1}, {1, 1}});
  CHECK(Poly::monomial(Rat(1), 6).squarefree_profile() == std::map<int, int>{{6, 1}});
  // tree L cube
  Poly L = parse({-384, 160, -16, 1}).pow(3);
  CHECK(L.squarefree_profile() == std::map<int, int>{{3, 3}});
  CHECK_THROWS_AS(Poly().squarefree_profile(), std::domain_error);
}

TEST_CASE("squarefree decomposition reassembles the polynomial") {
  for (int i = 0; i < 30; ++i) {
    Poly p = random_poly(4);
    if (p.is_zero()) continue;
    Poly q = random_poly(3);
    if (!q.is_zero()) p = p * q.pow(2);
    if (p.degree() < 1) continue;
    Poly prod = Poly::one();
    int total = 0;
    for (const auto& [m, factor] : p.squarefree_decomposition()) {
      prod = prod * factor.pow(m);
      total += m * factor.degree();
    }
    CHECK(p.leading() * prod == p);
    CHECK(total == p.degree());
  }
}

TEST_CASE("divmod roundtrip") {
  for (int i = 0; i < 40; ++i) {
    Poly a = random_poly(7), b = random_poly(4);
    if (b.is_zero()) continue;
    auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    if (!r.is_zero()) CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("valuation") {
  CHECK(parse({0, 0, 3, 1}).valuation() == 2);
  CHECK(parse({5}).valuation() == 0);
}
