#ifndef DZ_DZPAIR_HPP
#define DZ_DZPAIR_HPP

#include <string>

#include "dz/passport.hpp"
#include "dz/poly.hpp"

namespace dz {

/// A certified Davenport–Zannier pair: P, Q of equal degree n with
/// R = P - Q, gcd(P, Q) constant, multiplicity patterns matching the
/// passport and deg R = (n+1) - (p+q). Constructors in series.hpp only
/// return values that passed check_dz.
struct DZPair {
  Poly P;
  Poly Q;
  Poly R;
  Passport passport;
  std::string provenance;
};

}  // namespace dz

#endif
