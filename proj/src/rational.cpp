#include "dz/rational.hpp"

namespace dz {

Rat Rat::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("Rat::parse: empty string");
  for (size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    bool ok = isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              ((c == '-' || c == '+') && (i == 0 || t[i - 1] == '/'));
    if (!ok) throw std::invalid_argument("Rat::parse: bad character in '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(t, 10) != 0)
    throw std::invalid_argument("Rat::parse: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("Rat::parse: zero denominator");
  q.canonicalize();
  return Rat(std::move(q));
}

Rat Rat::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("Rat::pow: 0 to negative power");
    Rat inv(den(), num());
    return inv.pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rat pow2(long e) { return Rat(2).pow(e); }

mpz_class zpow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace dz
