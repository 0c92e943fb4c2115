#ifndef DZ_VERIFY_HPP
#define DZ_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "dz/dzpair.hpp"
#include "dz/passport.hpp"
#include "dz/poly.hpp"

namespace dz {

/// Result of certifying a candidate pair. Mathematical failures are report
/// fields, never exceptions; exceptions are reserved for malformed inputs
/// (unequal degrees, zero polynomials).
struct DZReport {
  bool coprime = false;
  Partition alpha_observed;
  Partition beta_observed;
  int n = 0;
  /// Part counts used for the degree bound: from the expected passport when
  /// one was supplied, otherwise from the observed profiles.
  int p = 0;
  int q = 0;
  int degR_observed = -1;  // -1 encodes R = 0
  int degR_required = 0;
  bool minimal = false;
  /// Present when an expected passport was supplied.
  std::optional<bool> passport_match;
  /// deg R < (n+1)-(p_obs+q_obs) would contradict the degree lower bound;
  /// it can only mean an arithmetic bug and is flagged loudly.
  bool bound_violated = false;
  std::vector<std::string> messages;

  /// Everything a DZ-pair must satisfy (with passport match when checked).
  bool pass() const {
    return coprime && minimal && !bound_violated && passport_match.value_or(true);
  }

  std::string text() const;
};

/// Certifies (P, Q): coprimality, multiplicity profiles, degree of P-Q
/// against the bound (n+1)-(p+q). Never factors over Q: profiles come from
/// iterated gcd only. Throws std::invalid_argument unless
/// deg P = deg Q >= 1.
DZReport check_dz(const Poly& P, const Poly& Q,
                  const std::optional<Passport>& expected = std::nullopt);

/// Reciprocal restatement of minimality: x^m | P* - Q* where m = p+q-1 is
/// the topological edge count of the tree.
bool check_reciprocal_form(const DZPair& pair);

/// For P = A^3, Q = B^2 with deg A = 2k, deg B = 3k: the combination
/// 3A'B - 2AB' collapses to a nonzero constant. Returns it, or nullopt when
/// the result is not a nonzero constant.
std::optional<Rat> check_cube_square_relation(const Poly& A, const Poly& B);

/// Exact check that f = num/den takes value `value` at `at` and its first
/// `vanish_order` derivatives vanish there. Throws on a pole.
bool check_belyi_critical(const Poly& num, const Poly& den, const Rat& at,
                          int vanish_order, const Rat& value = Rat(1));

/// Thrown by constructors whose output failed certification.
class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& what, DZReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const DZReport& report() const { return report_; }

 private:
  DZReport report_;
};

}  // namespace dz

#endif
