#include "dz/series.hpp"

#include <algorithm>

namespace dz {

namespace {
const Rat kZero(0);
}

Series::Series(int order, std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("Series: negative order");
  c_.resize(static_cast<size_t>(order) + 1, Rat(0));
}

Series Series::from_poly(const Poly& p, int order) {
  Series s(order);
  for (int i = 0; i <= order; ++i) s.c_[static_cast<size_t>(i)] = p.coeff(i);
  return s;
}

Series Series::one(int order) {
  Series s(order);
  s.c_[0] = Rat(1);
  return s;
}

const Rat& Series::coeff(int i) const {
  if (i < 0 || i > order()) return kZero;
  return c_[static_cast<size_t>(i)];
}

void Series::set_coeff(int i, const Rat& v) {
  if (i < 0 || i > order()) throw std::out_of_range("Series::set_coeff");
  c_[static_cast<size_t>(i)] = v;
}

Series Series::truncated(int order) const {
  if (order > this->order())
    throw std::invalid_argument("Series::truncated: cannot extend order");
  Series s(order);
  for (int i = 0; i <= order; ++i) s.c_[static_cast<size_t>(i)] = coeff(i);
  return s;
}

Series Series::operator-() const {
  Series r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Series operator+(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) r.c_[static_cast<size_t>(i)] = a.coeff(i) + b.coeff(i);
  return r;
}

Series operator-(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) r.c_[static_cast<size_t>(i)] = a.coeff(i) - b.coeff(i);
  return r;
}

Series operator*(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= n; ++j)
      r.c_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return r;
}

Series operator*(const Rat& s, const Series& f) {
  Series r(f);
  for (auto& c : r.c_) c *= s;
  return r;
}

Series Series::pow_rational(const Rat& r) const {
  if (!coeff(0).is_one())
    throw std::domain_error("Series::pow_rational: constant term must be 1");
  const int n = order();
  Series g(n);
  g.c_[0] = Rat(1);
  // From f g' = r f' g:  (k+1) g_{k+1} = r sum (i+1) f_{i+1} g_{k-i}
  //                                      - sum_{i<k} (i+1) g_{i+1} f_{k-i}
  for (int k = 0; k < n; ++k) {
    Rat acc(0);
    for (int i = 0; i <= k; ++i)
      acc += r * Rat(i + 1) * coeff(i + 1) * g.coeff(k - i);
    for (int i = 0; i < k; ++i)
      acc -= Rat(i + 1) * g.coeff(i + 1) * coeff(k - i);
    g.c_[static_cast<size_t>(k + 1)] = acc / Rat(k + 1);
  }
  return g;
}

Series Series::inverse() const {
  const Rat c0 = coeff(0);
  if (c0.is_zero()) throw std::domain_error("Series::inverse: zero constant term");
  const int n = order();
  Series g(n);
  g.c_[0] = Rat(1) / c0;
  for (int k = 1; k <= n; ++k) {
    Rat acc(0);
    for (int i = 1; i <= k; ++i) acc += coeff(i) * g.coeff(k - i);
    g.c_[static_cast<size_t>(k)] = -acc / c0;
  }
  return g;
}

int Series::valuation() const {
  for (int i = 0; i <= order(); ++i)
    if (!coeff(i).is_zero()) return i;
  return order() + 1;
}

}  // namespace dz
