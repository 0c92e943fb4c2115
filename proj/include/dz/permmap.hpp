#ifndef DZ_PERMMAP_HPP
#define DZ_PERMMAP_HPP

#include <gmpxx.h>

#include <vector>

#include "dz/passport.hpp"
#include "dz/tree.hpp"

namespace dz {

/// Monodromy representation of an expanded map: rotation permutations on
/// edge labels 0..n-1 around black (sigma) and white (alpha) vertices.
/// Invariant: <sigma, alpha> acts transitively (the map is connected).
struct PermPair {
  std::vector<int> sigma;
  std::vector<int> alpha;

  int n() const { return static_cast<int>(sigma.size()); }
};

/// Replaces each weight-w edge by w parallel map edges placed consecutively
/// in both rotations (reversed on the white side, which is what keeps the
/// in-between faces of degree 1). Labels are assigned depth-first from
/// vertex 0.
PermPair expand_to_map(const WeightedTree& tree);

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm);

/// Face degrees: cycle type of (sigma·alpha)^{-1}, composition applying
/// alpha first. This convention is frozen; duality tests depend on it.
Partition face_profile(const PermPair& pair);

bool is_transitive(const PermPair& pair);

/// Order of <sigma, alpha> by a stabilizer-chain (Schreier–Sims) method.
/// Exact; throws when n exceeds the bound.
mpz_class group_order(const PermPair& pair, int bound = 64);

/// Simultaneous-conjugacy test: exists g with g s1 g^-1 = s2 and
/// g a1 g^-1 = a2. Linear-time propagation per anchor choice, valid for
/// transitive pairs.
bool pairs_isomorphic(const PermPair& a, const PermPair& b);

/// The dual map keeps the white permutation and turns faces into black
/// vertices: dual = (face permutation, alpha).
PermPair dual_map(const PermPair& pair);

/// A tree is self-dual when its expanded map is isomorphic to its dual.
bool is_self_dual(const WeightedTree& tree);

}  // namespace dz

#endif
