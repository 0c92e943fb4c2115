#ifndef DZ_SERIES_HPP
#define DZ_SERIES_HPP

#include <vector>

#include "dz/poly.hpp"
#include "dz/rational.hpp"

namespace dz {

/// Truncated power series with exact rational coefficients, orders 0..N.
/// The order is fixed at construction; binary operations truncate to the
/// smaller of the two orders and never extend.
class Series {
 public:
  explicit Series(int order) : c_(static_cast<size_t>(order) + 1, Rat(0)) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
  }
  Series(int order, std::vector<Rat> coeffs);

  static Series from_poly(const Poly& p, int order);
  static Series one(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int i) const;
  void set_coeff(int i, const Rat& v);

  Series truncated(int order) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Rat& s, const Series& f);
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  /// f^r for rational r by the logarithmic-derivative recurrence.
  /// Requires constant term exactly 1.
  Series pow_rational(const Rat& r) const;

  /// 1/f; requires nonzero constant term.
  Series inverse() const;

  /// Lowest index with nonzero coefficient, or order()+1 when all zero.
  int valuation() const;

  Poly to_poly() const { return Poly(c_); }

 private:
  std::vector<Rat> c_;
};

}  // namespace dz

#endif
