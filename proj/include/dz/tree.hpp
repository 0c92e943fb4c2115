#ifndef DZ_TREE_HPP
#define DZ_TREE_HPP

#include <string>
#include <vector>

#include "dz/passport.hpp"

namespace dz {

/// Weighted bicolored plane tree. Vertices carry a color and the cyclic
/// rotation of incident edges; each edge is a (weight, neighbor) slot in the
/// rotation lists of both endpoints. The embedding is the rotation system:
/// reordering a rotation generally yields a different plane tree.
class WeightedTree {
 public:
  struct Vertex {
    bool black = true;
    std::vector<std::pair<int, int>> rot;  // (weight, neighbor) in cyclic order
  };

  WeightedTree() = default;
  /// Validates: connectedness, |E| = |V|-1, bipartite colors, weights >= 1,
  /// and mutual consistency of the rotation slots.
  explicit WeightedTree(std::vector<Vertex> verts);

  const std::vector<Vertex>& vertices() const { return v_; }
  int vertex_count() const { return static_cast<int>(v_.size()); }
  int total_weight() const;

  Passport passport() const;

  /// Lexicographically minimal DFS encoding over all black roots and
  /// rotation starts; equal codes = orientation-preserving isomorphic.
  std::vector<int> canonical_code() const;

  /// Reflection: all rotations reversed.
  WeightedTree mirrored() const;

  /// Isomorphic to its own mirror image. Recorded as metadata only; mirror
  /// images with the same passport are distinct plane trees otherwise.
  bool is_mirror_symmetric() const;

  /// Order of the orientation-preserving automorphism group (rotations
  /// about the symmetry center).
  int symmetry_order() const;

  /// Nested term grammar, serialized from the canonical root:
  ///   node   := color [ "(" branch { "," branch } ")" ]
  ///   branch := weight ":" node
  ///   color  := "B" | "W"
  std::string serialize() const;
  static WeightedTree parse(const std::string& text);

  friend bool operator==(const WeightedTree& a, const WeightedTree& b) {
    return a.canonical_code() == b.canonical_code();
  }

 private:
  std::vector<int> encode_from(int root, int start_slot) const;
  std::vector<Vertex> v_;
};

/// All weighted bicolored plane trees with the given passport, up to
/// orientation-preserving isomorphism, in deterministic canonical order.
/// Throws when the passport weight exceeds the bound.
std::vector<WeightedTree> enumerate_orbit(const Passport& passport,
                                          int weight_bound = 40);

bool is_unitree(const Passport& passport, int weight_bound = 40);

/// Reads the enumeration weight bound from DZ_ENUM_WEIGHT_BOUND when set.
int default_enum_weight_bound();

}  // namespace dz

#endif
