#ifndef DZ_PASSPORT_HPP
#define DZ_PASSPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace dz {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  /// Expands a multiplicity profile {multiplicity -> count} into parts.
  static Partition from_profile(const std::map<int, int>& profile);

  int weight() const;
  int size() const { return static_cast<int>(parts.size()); }

  /// "7,1" style, comma separated descending.
  std::string str() const;
  static Partition parse(const std::string& s);

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts == b.parts;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
};

/// Pair of partitions of a common weight: degrees of black and white
/// vertices, equivalently the root-multiplicity patterns of P and Q.
struct Passport {
  Partition black;
  Partition white;

  Passport() = default;
  Passport(Partition b, Partition w);

  int weight() const { return black.weight(); }

  /// "a1,a2,...|b1,b2,..."
  std::string str() const { return black.str() + "|" + white.str(); }
  static Passport parse(const std::string& s);

  friend bool operator==(const Passport& a, const Passport& b) {
    return a.black == b.black && a.white == b.white;
  }
  friend bool operator!=(const Passport& a, const Passport& b) { return !(a == b); }
};

}  // namespace dz

#endif
