#ifndef DZ_POLY_HPP
#define DZ_POLY_HPP

#include <initializer_list>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "dz/rational.hpp"

namespace dz {

/// Dense univariate polynomial over the rationals, coefficients stored by
/// ascending degree. The highest stored coefficient is nonzero; the zero
/// polynomial stores nothing and reports degree kNegInf.
class Poly {
 public:
  static constexpr int kNegInf = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return constant(Rat(1)); }
  static Poly x() { return monomial(Rat(1), 1); }
  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, int deg);
  /// (x + b)
  static Poly linear(const Rat& a, const Rat& b);

  int degree() const { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of x^i; zero outside the stored range.
  const Rat& coeff(int i) const;
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& at) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(int e) const;  // e >= 0
  Poly derivative() const;
  /// this(g), expanded.
  Poly compose(const Poly& g) const;
  /// this(x^d) for d >= 1.
  Poly substitute_power(int d) const;

  /// Quotient and remainder of exact rational division; o nonzero.
  std::pair<Poly, Poly> divmod(const Poly& o) const;
  /// True when o divides this with zero remainder.
  bool divisible_by(const Poly& o) const;
  Poly monic() const;

  /// Monic gcd by the Euclidean remainder sequence; throws if both zero.
  static Poly gcd(const Poly& a, const Poly& b);

  /// x^n * this(1/x): coefficient reversal padded to length n+1.
  /// Requires n >= degree.
  Poly reciprocal(int n) const;

  /// Yun's squarefree decomposition: monic pairwise-coprime squarefree
  /// factors with their multiplicities, so that the product of factor^mult
  /// equals this polynomial up to its leading coefficient. Nontrivial
  /// factors only. Throws on the zero polynomial.
  std::vector<std::pair<int, Poly>> squarefree_decomposition() const;

  /// Multiplicity profile: multiplicity -> number of distinct roots with
  /// exactly that multiplicity (degree of the squarefree factor).
  std::map<int, int> squarefree_profile() const;

  /// Largest m with x^m dividing this (0 for nonzero constant term);
  /// zero polynomial yields kNegInf.
  int valuation() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace dz

#endif
