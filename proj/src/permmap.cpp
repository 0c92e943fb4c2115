#include "dz/permmap.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace dz {

PermPair expand_to_map(const WeightedTree& tree) {
  const auto& verts = tree.vertices();
  const int nv = tree.vertex_count();
  // assign a contiguous label block to each tree edge, DFS from vertex 0
  std::map<std::pair<int, int>, std::pair<int, int>> block;  // edge -> [first, weight]
  int next = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    for (auto [w, u] : verts[static_cast<size_t>(v)].rot) {
      if (u == parent) continue;
      auto key = std::minmax(v, u);
      if (block.count({key.first, key.second})) continue;
      block[{key.first, key.second}] = {next, w};
      next += w;
      dfs(u, v);
    }
  };
  dfs(0, -1);

  const int n = next;
  PermPair pr;
  pr.sigma.assign(static_cast<size_t>(n), 0);
  pr.alpha.assign(static_cast<size_t>(n), 0);
  for (int v = 0; v < nv; ++v) {
    std::vector<int> seq;
    for (auto [w, u] : verts[static_cast<size_t>(v)].rot) {
      auto key = std::minmax(v, u);
      auto [first, weight] = block[{key.first, key.second}];
      if (verts[static_cast<size_t>(v)].black)
        for (int i = 0; i < weight; ++i) seq.push_back(first + i);
      else
        for (int i = weight - 1; i >= 0; --i) seq.push_back(first + i);
    }
    auto& perm = verts[static_cast<size_t>(v)].black ? pr.sigma : pr.alpha;
    const int k = static_cast<int>(seq.size());
    for (int i = 0; i < k; ++i)
      perm[static_cast<size_t>(seq[static_cast<size_t>(i)])] =
          seq[static_cast<size_t>((i + 1) % k)];
  }
  return pr;
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    std::vector<int> c;
    int j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      c.push_back(j);
      j = perm[static_cast<size_t>(j)];
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  // (p*q)(x) = p(q(x))
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<size_t>(q[i])];
  return r;
}

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return r;
}

}  // namespace

Partition face_profile(const PermPair& pair) {
  auto f = inverse(compose(pair.sigma, pair.alpha));
  std::vector<int> degs;
  for (const auto& c : cycles_of(f)) degs.push_back(static_cast<int>(c.size()));
  return Partition(std::move(degs));
}

bool is_transitive(const PermPair& pair) {
  const int n = pair.n();
  if (n == 0) return false;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto* p : {&pair.sigma, &pair.alpha}) {
      int u = (*p)[static_cast<size_t>(v)];
      if (!seen[static_cast<size_t>(u)]) {
        seen[static_cast<size_t>(u)] = true;
        ++cnt;
        stack.push_back(u);
      }
    }
  }
  return cnt == n;
}

namespace {

// Deterministic Schreier–Sims stabilizer chain with nested generator sets:
// level i stores the full generating set of the stabilizer of the first i
// base points. Groups met here are small (monodromy groups on a few dozen
// points), so no Jerrum/Sims generator filtering.
class StabChain {
 public:
  StabChain(const std::vector<std::vector<int>>& gens, int n) : n_(n) {
    std::vector<std::vector<int>> clean;
    for (const auto& g : gens)
      if (!is_id(g)) clean.push_back(g);
    if (clean.empty()) return;
    new_level(first_moved(clean.front()));
    levels_[0].gens = std::move(clean);
    close(0);
  }

  mpz_class order() const {
    mpz_class o = 1;
    for (const auto& lvl : levels_) o *= static_cast<unsigned long>(lvl.orbit.size());
    return o;
  }

 private:
  struct Level {
    int base = 0;
    std::vector<std::vector<int>> gens;
    std::map<int, std::vector<int>> transversal;  // point -> rep with rep(base) = point
    std::vector<int> orbit;
  };

  int n_;
  std::vector<Level> levels_;

  static bool is_id(const std::vector<int>& p) {
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] != static_cast<int>(i)) return false;
    return true;
  }

  int first_moved(const std::vector<int>& g) const {
    for (int i = 0; i < n_; ++i)
      if (g[static_cast<size_t>(i)] != i) return i;
    return 0;
  }

  std::vector<int> idperm() const {
    std::vector<int> p(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) p[static_cast<size_t>(i)] = i;
    return p;
  }

  void new_level(int base) {
    Level L;
    L.base = base;
    levels_.push_back(std::move(L));
  }

  void recompute_orbit(size_t i) {
    Level& L = levels_[i];
    L.transversal.clear();
    L.orbit.assign(1, L.base);
    L.transversal[L.base] = idperm();
    size_t head = 0;
    while (head < L.orbit.size()) {
      int pt = L.orbit[head++];
      std::vector<int> rep = L.transversal[pt];
      for (const auto& g : L.gens) {
        int img = g[static_cast<size_t>(pt)];
        if (!L.transversal.count(img)) {
          L.transversal[img] = compose(g, rep);
          L.orbit.push_back(img);
        }
      }
    }
  }

  // Strips h through levels from.., returning the residue and stall level.
  std::pair<std::vector<int>, size_t> strip(std::vector<int> h, size_t from) const {
    for (size_t j = from; j < levels_.size(); ++j) {
      int img = h[static_cast<size_t>(levels_[j].base)];
      auto it = levels_[j].transversal.find(img);
      if (it == levels_[j].transversal.end()) return {std::move(h), j};
      h = compose(inverse(it->second), h);
    }
    return {std::move(h), levels_.size()};
  }

  // Establishes Schreier closure at level i (deeper levels re-closed on the
  // way). Level i's generator list never changes during its own closure, so
  // the orbit computed on entry stays final.
  void close(size_t i) {
    recompute_orbit(i);
    for (size_t oi = 0; oi < levels_[i].orbit.size(); ++oi) {
      int pt = levels_[i].orbit[oi];
      for (size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
        std::vector<int> g = levels_[i].gens[gi];
        std::vector<int> rep = levels_[i].transversal.at(pt);
        std::vector<int> s = compose(
            inverse(levels_[i].transversal.at(g[static_cast<size_t>(pt)])),
            compose(g, rep));
        if (is_id(s)) continue;
        auto [res, stall] = strip(std::move(s), i + 1);
        if (is_id(res)) continue;
        if (stall == levels_.size()) new_level(first_moved(res));
        size_t deepest = std::min(stall, levels_.size() - 1);
        for (size_t m = i + 1; m <= deepest; ++m) levels_[m].gens.push_back(res);
        for (size_t m = deepest + 1; m-- > i + 1;) close(m);
      }
    }
  }
};

}  // namespace

mpz_class group_order(const PermPair& pair, int bound) {
  if (pair.n() > bound)
    throw std::length_error("group_order: permutation degree exceeds bound " +
                            std::to_string(bound));
  if (pair.n() == 0) return 1;
  StabChain chain({pair.sigma, pair.alpha}, pair.n());
  return chain.order();
}

bool pairs_isomorphic(const PermPair& a, const PermPair& b) {
  const int n = a.n();
  if (n != b.n()) return false;
  if (n == 0) return true;
  for (int anchor = 0; anchor < n; ++anchor) {
    std::vector<int> g(static_cast<size_t>(n), -1);
    std::vector<bool> used(static_cast<size_t>(n), false);
    g[0] = anchor;
    used[static_cast<size_t>(anchor)] = true;
    std::vector<int> stack{0};
    bool ok = true;
    while (!stack.empty() && ok) {
      int v = stack.back();
      stack.pop_back();
      const std::pair<const std::vector<int>*, const std::vector<int>*> moves[2] = {
          {&a.sigma, &b.sigma}, {&a.alpha, &b.alpha}};
      for (auto [pa, pb] : moves) {
        int u = (*pa)[static_cast<size_t>(v)];
        int target = (*pb)[static_cast<size_t>(g[static_cast<size_t>(v)])];
        if (g[static_cast<size_t>(u)] < 0) {
          if (used[static_cast<size_t>(target)]) {
            ok = false;
            break;
          }
          g[static_cast<size_t>(u)] = target;
          used[static_cast<size_t>(target)] = true;
          stack.push_back(u);
        } else if (g[static_cast<size_t>(u)] != target) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    bool total = true;
    for (int i = 0; i < n && total; ++i)
      if (g[static_cast<size_t>(i)] < 0) total = false;
    if (!total) continue;  // non-transitive a: anchor propagation incomplete
    bool valid = true;
    for (int i = 0; i < n && valid; ++i) {
      if (g[static_cast<size_t>(a.sigma[static_cast<size_t>(i)])] !=
          b.sigma[static_cast<size_t>(g[static_cast<size_t>(i)])])
        valid = false;
      if (g[static_cast<size_t>(a.alpha[static_cast<size_t>(i)])] !=
          b.alpha[static_cast<size_t>(g[static_cast<size_t>(i)])])
        valid = false;
    }
    if (valid) return true;
  }
  return false;
}

PermPair dual_map(const PermPair& pair) {
  PermPair d;
  d.sigma = inverse(compose(pair.sigma, pair.alpha));
  d.alpha = pair.alpha;
  return d;
}

bool is_self_dual(const WeightedTree& tree) {
  PermPair m = expand_to_map(tree);
  return pairs_isomorphic(m, dual_map(m));
}

}  // namespace dz
