#include "dz/tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dz {

WeightedTree::WeightedTree(std::vector<Vertex> verts) : v_(std::move(verts)) {
  const int n = static_cast<int>(v_.size());
  if (n < 2) throw std::invalid_argument("WeightedTree: needs at least one edge");
  int edges = 0;
  for (int i = 0; i < n; ++i) {
    for (auto [w, j] : v_[static_cast<size_t>(i)].rot) {
      if (w < 1) throw std::invalid_argument("WeightedTree: weights must be >= 1");
      if (j < 0 || j >= n || j == i)
        throw std::invalid_argument("WeightedTree: bad neighbor index");
      if (v_[static_cast<size_t>(j)].black == v_[static_cast<size_t>(i)].black)
        throw std::invalid_argument("WeightedTree: colors must alternate");
      // the mirrored slot must exist with the same weight
      bool found = false;
      for (auto [w2, j2] : v_[static_cast<size_t>(j)].rot)
        if (j2 == i && w2 == w) found = true;
      if (!found) throw std::invalid_argument("WeightedTree: inconsistent rotations");
      ++edges;
    }
  }
  if (edges != 2 * (n - 1))
    throw std::invalid_argument("WeightedTree: not a tree (|E| != |V|-1)");
  // connectivity
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, u] : v_[static_cast<size_t>(v)].rot)
      if (!seen[static_cast<size_t>(u)]) {
        seen[static_cast<size_t>(u)] = true;
        ++cnt;
        stack.push_back(u);
      }
  }
  if (cnt != n) throw std::invalid_argument("WeightedTree: not connected");
}

int WeightedTree::total_weight() const {
  int tw = 0;
  for (const auto& v : v_)
    for (auto [w, u] : v.rot) tw += w;
  return tw / 2;
}

Passport WeightedTree::passport() const {
  std::vector<int> bl, wh;
  for (const auto& v : v_) {
    int d = 0;
    for (auto [w, u] : v.rot) d += w;
    (v.black ? bl : wh).push_back(d);
  }
  return Passport(Partition(std::move(bl)), Partition(std::move(wh)));
}

std::vector<int> WeightedTree::encode_from(int root, int start_slot) const {
  std::vector<int> out;
  std::function<void(int, int, int)> dfs = [&](int v, int parent, int parent_slot) {
    const auto& rot = v_[static_cast<size_t>(v)].rot;
    const int k = static_cast<int>(rot.size());
    out.push_back(k);
    const int nbranch = (parent < 0) ? k : k - 1;
    for (int i = 0; i < nbranch; ++i) {
      int s = (parent < 0) ? (start_slot + i) % k : (parent_slot + 1 + i) % k;
      auto [w, u] = rot[static_cast<size_t>(s)];
      out.push_back(w);
      int pslot = 0;
      const auto& urot = v_[static_cast<size_t>(u)].rot;
      for (int t = 0; t < static_cast<int>(urot.size()); ++t)
        if (urot[static_cast<size_t>(t)].second == v) pslot = t;
      dfs(u, v, pslot);
    }
  };
  dfs(root, -1, -1);
  return out;
}

std::vector<int> WeightedTree::canonical_code() const {
  std::vector<int> best;
  for (int v = 0; v < vertex_count(); ++v) {
    if (!v_[static_cast<size_t>(v)].black) continue;
    const int k = static_cast<int>(v_[static_cast<size_t>(v)].rot.size());
    for (int s = 0; s < k; ++s) {
      auto code = encode_from(v, s);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return best;
}

WeightedTree WeightedTree::mirrored() const {
  std::vector<Vertex> verts = v_;
  for (auto& v : verts) std::reverse(v.rot.begin(), v.rot.end());
  return WeightedTree(std::move(verts));
}

bool WeightedTree::is_mirror_symmetric() const {
  return mirrored().canonical_code() == canonical_code();
}

int WeightedTree::symmetry_order() const {
  // Any orientation-preserving automorphism is a rotation about a fixed
  // vertex; its order is k/period of the branch-code sequence there.
  int best = 1;
  for (int v = 0; v < vertex_count(); ++v) {
    const auto& rot = v_[static_cast<size_t>(v)].rot;
    const int k = static_cast<int>(rot.size());
    if (k <= 1) continue;
    std::vector<std::vector<int>> codes;
    for (int s = 0; s < k; ++s) {
      auto [w, u] = rot[static_cast<size_t>(s)];
      int pslot = 0;
      const auto& urot = v_[static_cast<size_t>(u)].rot;
      for (int t = 0; t < static_cast<int>(urot.size()); ++t)
        if (urot[static_cast<size_t>(t)].second == v) pslot = t;
      std::vector<int> c{w};
      // planted-subtree code of u away from v
      std::function<void(int, int, int)> dfs = [&](int x, int parent, int parent_slot) {
        const auto& xr = v_[static_cast<size_t>(x)].rot;
        const int kk = static_cast<int>(xr.size());
        c.push_back(kk);
        for (int i = 0; i < kk - 1; ++i) {
          int t = (parent_slot + 1 + i) % kk;
          auto [ww, uu] = xr[static_cast<size_t>(t)];
          c.push_back(ww);
          int ps = 0;
          const auto& ur = v_[static_cast<size_t>(uu)].rot;
          for (int q = 0; q < static_cast<int>(ur.size()); ++q)
            if (ur[static_cast<size_t>(q)].second == x) ps = q;
          dfs(uu, x, ps);
        }
      };
      dfs(u, v, pslot);
      codes.push_back(std::move(c));
    }
    for (int d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      bool periodic = true;
      for (int i = 0; i < k && periodic; ++i)
        if (codes[static_cast<size_t>(i)] != codes[static_cast<size_t>((i + d) % k)])
          periodic = false;
      if (periodic) {
        best = std::max(best, k / d);
        break;
      }
    }
  }
  return best;
}

std::string WeightedTree::serialize() const {
  // deterministic: emit from the root/start realizing the canonical code
  int broot = -1, bslot = 0;
  std::vector<int> best;
  for (int v = 0; v < vertex_count(); ++v) {
    if (!v_[static_cast<size_t>(v)].black) continue;
    const int k = static_cast<int>(v_[static_cast<size_t>(v)].rot.size());
    for (int s = 0; s < k; ++s) {
      auto code = encode_from(v, s);
      if (best.empty() || code < best) {
        best = std::move(code);
        broot = v;
        bslot = s;
      }
    }
  }
  std::ostringstream os;
  std::function<void(int, int, int)> emit = [&](int v, int parent, int parent_slot) {
    const auto& rot = v_[static_cast<size_t>(v)].rot;
    const int k = static_cast<int>(rot.size());
    os << (v_[static_cast<size_t>(v)].black ? 'B' : 'W');
    const int nbranch = (parent < 0) ? k : k - 1;
    if (nbranch == 0) return;
    os << "(";
    for (int i = 0; i < nbranch; ++i) {
      if (i) os << ",";
      int s = (parent < 0) ? (bslot + i) % k : (parent_slot + 1 + i) % k;
      auto [w, u] = rot[static_cast<size_t>(s)];
      os << w << ":";
      int pslot = 0;
      const auto& urot = v_[static_cast<size_t>(u)].rot;
      for (int t = 0; t < static_cast<int>(urot.size()); ++t)
        if (urot[static_cast<size_t>(t)].second == v) pslot = t;
      emit(u, v, pslot);
    }
    os << ")";
  };
  emit(broot, -1, -1);
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    if (pos >= s.size()) throw std::invalid_argument("tree parse: unexpected end");
    return s[pos++];
  }
  int number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("tree parse: expected number");
    return std::stoi(s.substr(start, pos - start));
  }

  // returns index of the created vertex
  int node(std::vector<WeightedTree::Vertex>& verts, int parent, int parent_w) {
    char c = take();
    if (c != 'B' && c != 'W')
      throw std::invalid_argument("tree parse: expected color B or W");
    int idx = static_cast<int>(verts.size());
    verts.push_back({c == 'B', {}});
    if (parent >= 0) verts[static_cast<size_t>(idx)].rot.push_back({parent_w, parent});
    if (peek() == '(') {
      take();
      while (true) {
        int w = number();
        if (take() != ':') throw std::invalid_argument("tree parse: expected ':'");
        int child = node(verts, idx, w);
        verts[static_cast<size_t>(idx)].rot.push_back({w, child});
        char nxt = take();
        if (nxt == ')') break;
        if (nxt != ',') throw std::invalid_argument("tree parse: expected ',' or ')'");
      }
    }
    return idx;
  }
};

}  // namespace

WeightedTree WeightedTree::parse(const std::string& text) {
  Parser p(text);
  std::vector<Vertex> verts;
  p.node(verts, -1, 0);
  p.skip_ws();
  if (p.pos != text.size())
    throw std::invalid_argument("tree parse: trailing characters");
  return WeightedTree(std::move(verts));
}

namespace {

// Orbit generation: planted plane trees over degree budgets, rooted at a
// vertex carrying the largest black degree, then deduplicated by canonical
// code. Ordered branch lists make every rotation of every tree appear, so
// dedup by minimal code is exhaustive.
struct OrbitGen {
  std::map<int, int> black, white;  // remaining degree -> count
  std::vector<WeightedTree::Vertex> verts;
  std::set<std::vector<int>> seen;
  std::vector<WeightedTree> out;

  void add_vertex(bool is_black) { verts.push_back({is_black, {}}); }

  // Build ordered branches at vertex `v` consuming `budget`; then `done()`.
  void branches(int v, bool parent_black, int budget, const std::function<void()>& done) {
    if (budget == 0) {
      done();
      return;
    }
    auto& avail = parent_black ? white : black;
    for (int w = 1; w <= budget; ++w) {
      for (auto it = avail.rbegin(); it != avail.rend(); ++it) {
        const int d = it->first;
        if (it->second <= 0 || d < w) continue;
        --it->second;
        int child = static_cast<int>(verts.size());
        add_vertex(!parent_black);
        verts[static_cast<size_t>(child)].rot.push_back({w, v});
        verts[static_cast<size_t>(v)].rot.push_back({w, child});
        branches(child, !parent_black, d - w, [&, w]() {
          branches(v, parent_black, budget - w, done);
        });
        verts[static_cast<size_t>(v)].rot.pop_back();
        verts.pop_back();
        ++it->second;
      }
    }
  }

  void run(const Passport& pp) {
    for (int d : pp.black.parts) ++black[d];
    for (int d : pp.white.parts) ++white[d];
    const int rootdeg = pp.black.parts.front();
    --black[rootdeg];
    add_vertex(true);
    branches(0, true, rootdeg, [&]() {
      for (const auto& [d, c] : black)
        if (c != 0) return;
      for (const auto& [d, c] : white)
        if (c != 0) return;
      WeightedTree t(verts);
      auto code = t.canonical_code();
      if (seen.insert(code).second) out.push_back(std::move(t));
    });
  }
};

}  // namespace

std::vector<WeightedTree> enumerate_orbit(const Passport& passport, int weight_bound) {
  if (passport.weight() > weight_bound)
    throw std::length_error("enumerate_orbit: passport weight exceeds bound " +
                            std::to_string(weight_bound));
  OrbitGen gen;
  gen.run(passport);
  std::sort(gen.out.begin(), gen.out.end(),
            [](const WeightedTree& a, const WeightedTree& b) {
              return a.canonical_code() < b.canonical_code();
            });
  return gen.out;
}

bool is_unitree(const Passport& passport, int weight_bound) {
  return enumerate_orbit(passport, weight_bound).size() == 1;
}

int default_enum_weight_bound() {
  if (const char* env = std::getenv("DZ_ENUM_WEIGHT_BOUND")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 40;
}

}  // namespace dz
