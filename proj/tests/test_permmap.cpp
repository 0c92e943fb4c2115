#include <doctest.h>

#include <set>

#include "dz/permmap.hpp"

using namespace dz;

namespace {

WeightedTree single_edge(int w) {
  return WeightedTree({{true, {{w, 1}}}, {false, {{w, 0}}}});
}

PermPair from_cycles(int n, const std::vector<std::vector<int>>& sig,
                     const std::vector<std::vector<int>>& alf) {
  PermPair p;
  p.sigma.resize(static_cast<size_t>(n));
  p.alpha.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p.sigma[static_cast<size_t>(i)] = p.alpha[static_cast<size_t>(i)] = i;
  for (const auto& c : sig)
    for (size_t i = 0; i < c.size(); ++i)
      p.sigma[static_cast<size_t>(c[i] - 1)] = c[(i + 1) % c.size()] - 1;
  for (const auto& c : alf)
    for (size_t i = 0; i < c.size(); ++i)
      p.alpha[static_cast<size_t>(c[i] - 1)] = c[(i + 1) % c.size()] - 1;
  return p;
}

// Exhaustive closure; the independent oracle for group_order.
long brute_order(const PermPair& pr) {
  std::set<std::vector<int>> seen;
  std::vector<int> id(static_cast<size_t>(pr.n()));
  for (int i = 0; i < pr.n(); ++i) id[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> frontier{id};
  seen.insert(id);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& g : frontier)
      for (const auto* h : {&pr.sigma, &pr.alpha}) {
        std::vector<int> ng(g.size());
        for (size_t i = 0; i < g.size(); ++i) ng[i] = (*h)[static_cast<size_t>(g[i])];
        if (seen.insert(ng).second) next.push_back(std::move(ng));
      }
    frontier = std::move(next);
  }
  return static_cast<long>(seen.size());
}

int euler_characteristic(const PermPair& m) {
  auto f = dual_map(m).sigma;  // face permutation
  int cs = static_cast<int>(cycles_of(m.sigma).size());
  int ca = static_cast<int>(cycles_of(m.alpha).size());
  int cf = static_cast<int>(cycles_of(f).size());
  return cs + ca + cf - m.n();
}

}  // namespace

TEST_CASE("single weighted edge expands to mutually inverse cycles") {
  PermPair m = expand_to_map(single_edge(3));
  CHECK(m.n() == 3);
  // sigma followed by alpha must be the identity
  for (int i = 0; i < 3; ++i)
    CHECK(m.sigma[static_cast<size_t>(m.alpha[static_cast<size_t>(i)])] == i);
  CHECK(cycles_of(m.sigma).size() == 1);
  CHECK(face_profile(m).parts == std::vector<int>{1, 1, 1});
  CHECK(euler_characteristic(m) == 2);
}

TEST_CASE("two-edge ordinary path") {
  auto t = WeightedTree::parse("B(1:W(1:B))");
  PermPair m = expand_to_map(t);
  CHECK(m.n() == 2);
  CHECK(cycles_of(m.sigma).size() == 2);   // two black fixed points
  CHECK(cycles_of(m.alpha).size() == 1);   // one transposition
  CHECK(face_profile(m).parts == std::vector<int>{2});
  CHECK_FALSE(is_self_dual(t));
}

TEST_CASE("expanded maps satisfy the Euler formula across an orbit") {
  for (const char* pp : {"7,1|2,2,2,1,1", "10,10,10|3,3,3,3,3,3,3,3,3,3"})
    for (const auto& t : enumerate_orbit(Passport::parse(pp))) {
      PermPair m = expand_to_map(t);
      CHECK(is_transitive(m));
      CHECK(euler_characteristic(m) == 2);
      // faces of a minimal-pair tree: (n - r, 1^r) with r = n - edges
      int edges = t.vertex_count() - 1;
      int r = m.n() - edges;
      Partition faces = face_profile(m);
      CHECK(faces.parts.front() == m.n() - r);
      for (size_t i = 1; i < faces.parts.size(); ++i) CHECK(faces.parts[i] == 1);
      CHECK(static_cast<int>(faces.parts.size()) == r + 1);
    }
}

TEST_CASE("group order by stabilizer chain matches brute closure") {
  PermPair printed = from_cycles(8, {{1, 7, 6, 5, 4, 8, 3}}, {{1, 2}, {3, 8}, {6, 7}});
  CHECK(group_order(printed) == 336);
  CHECK(brute_order(printed) == 336);

  PermPair cyc = from_cycles(6, {{1, 2, 3, 4, 5, 6}}, {{1, 2, 3, 4, 5, 6}});
  CHECK(group_order(cyc) == 6);

  PermPair trivial = from_cycles(1, {}, {});
  CHECK(group_order(trivial) == 1);

  // random-ish spot checks vs the oracle
  PermPair p1 = from_cycles(5, {{1, 2, 3}}, {{3, 4, 5}});
  CHECK(group_order(p1) == brute_order(p1));
  PermPair p2 = from_cycles(7, {{1, 2, 3, 4, 5, 6, 7}}, {{1, 2}});
  CHECK(group_order(p2) == brute_order(p2));
}

TEST_CASE("group order bound") {
  PermPair big;
  big.sigma.resize(100);
  big.alpha.resize(100);
  CHECK_THROWS_AS(group_order(big), std::length_error);
}

TEST_CASE("order is transitive-divisible: multiple of n, divides n!") {
  for (const auto& t : enumerate_orbit(Passport::parse("6,1,1|3,3,1,1"))) {
    PermPair m = expand_to_map(t);
    mpz_class o = group_order(m);
    CHECK(o % m.n() == 0);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m.n()));
    CHECK(fact % o == 0);
  }
}

TEST_CASE("self-duality") {
  CHECK(is_self_dual(single_edge(1)));
  CHECK_FALSE(is_self_dual(single_edge(3)));
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}}) {
    std::vector<int> black{p + q};
    for (int i = 0; i < p + q - 2; ++i) black.push_back(1);
    Passport pp(Partition(black), Partition({2 * p - 1, 2 * q - 1}));
    auto orbit = enumerate_orbit(pp);
    CHECK(static_cast<int>(orbit.size()) == 2 * p - 1);
    int selfdual = 0;
    for (const auto& t : orbit)
      if (is_self_dual(t)) ++selfdual;
    CHECK(selfdual == 1);
  }
}

TEST_CASE("pgl27 tree is conjugate to the printed permutation pair") {
  auto tree = WeightedTree::parse("B(1:W(1:B),2:W,1:W,1:W,2:W)");
  PermPair m = expand_to_map(tree);
  PermPair printed = from_cycles(8, {{1, 7, 6, 5, 4, 8, 3}}, {{1, 2}, {3, 8}, {6, 7}});
  CHECK(pairs_isomorphic(m, printed));
  CHECK(group_order(m) == 336);
  // a genuinely different tree from the same orbit is not conjugate
  bool found_noniso = false;
  for (const auto& t : enumerate_orbit(Passport::parse("7,1|2,2,2,1,1")))
    if (!pairs_isomorphic(expand_to_map(t), printed)) found_noniso = true;
  CHECK(found_noniso);
}
