#include "dz/poly.hpp"

#include <sstream>

namespace dz {

namespace {
const Rat kZero(0);
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Rat& c) {
  Poly p;
  p.c_ = {c};
  p.trim();
  return p;
}

Poly Poly::monomial(const Rat& c, int deg) {
  Poly p;
  if (!c.is_zero()) {
    p.c_.assign(static_cast<size_t>(deg) + 1, Rat(0));
    p.c_.back() = c;
  }
  return p;
}

Poly Poly::linear(const Rat& a, const Rat& b) { return Poly({b, a}); }

const Rat& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

Rat Poly::eval(const Rat& at) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly operator*(const Rat& s, const Poly& p) {
  Poly r(p);
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly acc = one();
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return Poly(std::move(r));
}

Poly Poly::compose(const Poly& g) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
  return acc;
}

Poly Poly::substitute_power(int d) const {
  if (d < 1) throw std::invalid_argument("substitute_power: d must be >= 1");
  if (is_zero()) return Poly();
  std::vector<Rat> r(static_cast<size_t>(degree()) * d + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i * d] = c_[i];
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
  if (o.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
  Poly rem(*this);
  Poly quo;
  const int dq = o.degree();
  const Rat lead = o.leading();
  while (!rem.is_zero() && rem.degree() >= dq) {
    int shift = rem.degree() - dq;
    Rat f = rem.leading() / lead;
    quo += monomial(f, shift);
    rem -= monomial(f, shift) * o;
  }
  return {quo, rem};
}

bool Poly::divisible_by(const Poly& o) const { return divmod(o).second.is_zero(); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return (Rat(1) / leading()) * *this;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("Poly::gcd: gcd(0, 0) undefined");
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = u.divmod(v).second;
    u = v;
    v = r.monic();  // keeps coefficient growth in check
  }
  return u.monic();
}

Poly Poly::reciprocal(int n) const {
  if (n < degree())
    throw std::invalid_argument("Poly::reciprocal: declared degree below actual degree");
  if (n < 0) throw std::invalid_argument("Poly::reciprocal: negative declared degree");
  std::vector<Rat> r(static_cast<size_t>(n) + 1, Rat(0));
  for (int i = 0; i <= n; ++i) r[static_cast<size_t>(n - i)] = coeff(i);
  return Poly(std::move(r));
}

std::vector<std::pair<int, Poly>> Poly::squarefree_decomposition() const {
  if (is_zero())
    throw std::domain_error("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<int, Poly>> out;
  if (degree() == 0) return out;
  // Yun's algorithm.
  Poly p = monic();
  Poly g = gcd(p, p.derivative());
  Poly b = p.divmod(g).first;
  Poly c = p.derivative().divmod(g).first;
  Poly d = c - b.derivative();
  int mult = 1;
  while (b.degree() > 0) {
    Poly a = gcd(b, d);
    if (a.degree() > 0) out.push_back({mult, a});
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
    ++mult;
  }
  return out;
}

std::map<int, int> Poly::squarefree_profile() const {
  std::map<int, int> profile;
  for (const auto& [mult, factor] : squarefree_decomposition())
    profile[mult] = factor.degree();
  return profile;
}

int Poly::valuation() const {
  if (is_zero()) return kNegInf;
  int v = 0;
  while (c_[static_cast<size_t>(v)].is_zero()) ++v;
  return v;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rat a = c.abs();
    if (i == 0 || !a.is_one()) os << a.str();
    if (i > 0) {
      if (!a.is_one()) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace dz
