#ifndef DZ_HALL_HPP
#define DZ_HALL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dz/poly.hpp"

namespace dz::hall {

/// Solution of u^2 - 2 v^2 = 2.
struct PellSolution {
  mpz_class u;
  mpz_class v;
};

/// (2,1), then (u,v) -> (3u+4v, 2u+3v); each term satisfies the invariant.
std::vector<PellSolution> pell_solutions(int count);

/// Integer pair with a small cube-square gap: gap = a^3 - b^2 = 432 z - 1080
/// exactly, and gap^2 <= 2 * 216^2 * a (checked in integers).
struct HallPair {
  mpz_class a;
  mpz_class b;
  mpz_class gap;
  mpz_class z;  // the substitution value that produced the pair
};

std::vector<HallPair> hall_pairs(int count);

/// The polynomial identity behind the construction, re-derived from
/// series_D(1,1) by substituting x = 2z and dividing by 8:
///   a(z)^3 - bq(z)^2 * c(z) = rhs(z) with rhs = 432 z - 1080,
/// and c(z) = 2(z+3)^2 + 2, which turns the Pell solutions (u, v = z+3)
/// into perfect squares. The printed form of the identity carries
/// 2z^2 - 12z + 20 and v = z - 3 instead; `printed_c_matches` records that
/// comparison (the re-derivation is authoritative).
struct HallDerivation {
  Poly a;    // 2z^2 - 10
  Poly bq;   // 2z^2 - 6z + 2
  Poly c;    // 2z^2 + 12z + 20
  Poly rhs;  // 432z - 1080
  bool printed_c_matches = false;
  std::string note;
};

HallDerivation derive_identity();

}  // namespace dz::hall

#endif
