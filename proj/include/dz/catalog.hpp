#ifndef DZ_CATALOG_HPP
#define DZ_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "dz/dzpair.hpp"
#include "dz/tree.hpp"
#include "dz/verify.hpp"

namespace dz::catalog {

/// One stored (or generated) pair from the collection, verified on load.
struct Entry {
  std::string name;
  bool metadata_only = false;
  /// Pair data; empty polynomials for metadata-only entries.
  Poly P, Q, R;
  /// Problem passport the pair is checked against. For the relaxed entries
  /// this is the unrelaxed cube/square passport the figure refers to, so
  /// check_dz reports the degree excess against it.
  Passport passport;
  /// Expected to fail minimality (degree of R above the bound).
  bool relaxed = false;
  /// Set for entries built from series recipes rather than stored text.
  bool generated = false;
  std::optional<WeightedTree> tree;
  std::optional<Poly> field_polynomial;  // metadata-only entries
  std::string notes;
};

/// Throws std::out_of_range for unknown names.
const Entry& get(const std::string& name);
bool contains(const std::string& name);
std::vector<std::string> names();

struct VerifyLine {
  std::string name;
  std::string passport;
  int degR = 0;
  bool relaxed = false;
  bool pass = false;
  DZReport report;
};

/// Runs check_dz on every pair entry against its stored passport. Failures
/// are content of the report, not exceptions; an entry passes when the
/// report matches what is expected of it (minimal, or expected-non-minimal
/// for the relaxed entries).
std::vector<VerifyLine> verify_all();

/// Raw JSON document the store was loaded from.
const std::string& raw_json();

}  // namespace dz::catalog

#endif
