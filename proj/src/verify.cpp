#include "dz/verify.hpp"

#include <sstream>

#include "dz/series.hpp"

namespace dz {

std::string DZReport::text() const {
  std::ostringstream os;
  os << "n=" << n << " coprime=" << (coprime ? "yes" : "no")
     << " alpha=" << alpha_observed.str() << " beta=" << beta_observed.str()
     << " degR=" << degR_observed << " required=" << degR_required
     << " minimal=" << (minimal ? "yes" : "no");
  if (passport_match) os << " passport_match=" << (*passport_match ? "yes" : "no");
  if (bound_violated) os << " BOUND-VIOLATED";
  for (const auto& m : messages) os << "\n  " << m;
  return os.str();
}

DZReport check_dz(const Poly& P, const Poly& Q,
                  const std::optional<Passport>& expected) {
  if (P.is_zero() || Q.is_zero())
    throw std::invalid_argument("check_dz: zero polynomial");
  if (P.degree() != Q.degree())
    throw std::invalid_argument("check_dz: deg P != deg Q");
  if (P.degree() < 1) throw std::invalid_argument("check_dz: need degree >= 1");

  DZReport rep;
  rep.n = P.degree();
  rep.coprime = Poly::gcd(P, Q).degree() == 0;
  rep.alpha_observed = Partition::from_profile(P.squarefree_profile());
  rep.beta_observed = Partition::from_profile(Q.squarefree_profile());

  const int p_obs = rep.alpha_observed.size();
  const int q_obs = rep.beta_observed.size();
  if (expected) {
    rep.p = expected->black.size();
    rep.q = expected->white.size();
    rep.passport_match = (rep.alpha_observed == expected->black &&
                          rep.beta_observed == expected->white);
    if (!*rep.passport_match)
      rep.messages.push_back("observed profiles differ from expected passport " +
                             expected->str());
  } else {
    rep.p = p_obs;
    rep.q = q_obs;
  }

  Poly R = P - Q;
  rep.degR_observed = R.is_zero() ? -1 : R.degree();
  rep.degR_required = (rep.n + 1) - (rep.p + rep.q);
  rep.minimal = (rep.degR_observed == rep.degR_required);

  // Zannier's lower bound with the *observed* part counts.
  if (rep.coprime && !R.is_zero() && R.degree() < (rep.n + 1) - (p_obs + q_obs)) {
    rep.bound_violated = true;
    rep.messages.push_back("deg R violates the lower bound: arithmetic bug");
  }
  if (!rep.coprime) rep.messages.push_back("gcd(P, Q) is not constant");
  if (!rep.minimal)
    rep.messages.push_back("deg(P-Q) = " + std::to_string(rep.degR_observed) +
                           " but minimality requires " +
                           std::to_string(rep.degR_required));
  return rep;
}

bool check_reciprocal_form(const DZPair& pair) {
  const int n = pair.P.degree();
  const int m = pair.passport.black.size() + pair.passport.white.size() - 1;
  Poly diff = pair.P.reciprocal(n) - pair.Q.reciprocal(n);
  if (diff.is_zero()) return true;
  return diff.valuation() >= m;
}

std::optional<Rat> check_cube_square_relation(const Poly& A, const Poly& B) {
  if (A.is_zero() || B.is_zero())
    throw std::invalid_argument("check_cube_square_relation: zero input");
  if (A.degree() % 2 != 0 || B.degree() != 3 * (A.degree() / 2))
    throw std::invalid_argument(
        "check_cube_square_relation: need deg A = 2k, deg B = 3k");
  Poly rel = Rat(3) * (A.derivative() * B) - Rat(2) * (A * B.derivative());
  if (rel.degree() == 0) return rel.coeff(0);
  return std::nullopt;
}

bool check_belyi_critical(const Poly& num, const Poly& den, const Rat& at,
                          int vanish_order, const Rat& value) {
  if (den.eval(at).is_zero())
    throw std::domain_error("check_belyi_critical: pole at the test point");
  // Taylor-expand f = num/den around `at`: derivative i vanishes iff the
  // i-th Taylor coefficient does.
  Poly shift = Poly::linear(Rat(1), at);  // x + at
  const int ord = vanish_order;
  Series nser = Series::from_poly(num.compose(shift), ord);
  Series dser = Series::from_poly(den.compose(shift), ord);
  Series f = nser * dser.inverse();
  if (f.coeff(0) != value) return false;
  for (int i = 1; i <= vanish_order; ++i)
    if (!f.coeff(i).is_zero()) return false;
  return true;
}

}  // namespace dz
