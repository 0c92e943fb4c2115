#include "dz/specfun.hpp"

#include <algorithm>

namespace dz {

Rat binom_rat(const Rat& top, int k) {
  if (k < 0) return Rat(0);
  Rat num(1);
  for (int i = 0; i < k; ++i) num *= top - Rat(i);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  return num / Rat(fact);
}

Poly jacobi(const JacobiParams& p) {
  Poly half_xm1 = Rat(1, 2) * Poly::linear(Rat(1), Rat(-1));  // (x-1)/2
  Poly acc;
  Poly powk = Poly::one();
  for (int k = 0; k <= p.n; ++k) {
    Rat c = binom_rat(Rat(p.n) + p.a + p.b + Rat(k), k) *
            binom_rat(Rat(p.n) + p.a, p.n - k);
    acc += c * powk;
    if (k < p.n) powk = powk * half_xm1;
  }
  return acc;
}

Rat jacobi_leading(const JacobiParams& p) {
  return pow2(-p.n) * binom_rat(Rat(2 * p.n) + p.a + p.b, p.n);
}

bool jacobi_degree_drops(const JacobiParams& p) {
  return jacobi_leading(p).is_zero();
}

Poly jacobi_ode_residual(const JacobiParams& p, const Poly& y) {
  Poly y1 = y.derivative();
  Poly y2 = y1.derivative();
  Poly one_minus_x2({Rat(1), Rat(0), Rat(-1)});
  Poly lin({p.b - p.a, -(p.a + p.b + Rat(2))});
  Rat n(p.n);
  return one_minus_x2 * y2 + lin * y1 + (n * (n + p.a + p.b + Rat(1))) * y;
}

Series weight_series(const Rat& a, const Rat& b, int order) {
  Series one_minus_x = Series::from_poly(Poly::linear(Rat(-1), Rat(1)), order);
  Series one_plus_x = Series::from_poly(Poly::linear(Rat(1), Rat(1)), order);
  return one_minus_x.pow_rational(a) * one_plus_x.pow_rational(b);
}

PadeForm pade_form(const Series& f, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("pade_form: negative order");
  if (f.order() < n + m)
    throw std::invalid_argument("pade_form: series order too small for [n/m]");

  // Unknowns q_0..q_m; equations [x^j](q f) = 0 for j = n+1..n+m.
  const int rows = m, cols = m + 1;
  std::vector<std::vector<Rat>> A(static_cast<size_t>(rows),
                                  std::vector<Rat>(static_cast<size_t>(cols), Rat(0)));
  for (int r = 0; r < rows; ++r) {
    int j = n + 1 + r;
    for (int i = 0; i <= m; ++i)
      if (j - i >= 0) A[static_cast<size_t>(r)][static_cast<size_t>(i)] = f.coeff(j - i);
  }

  // Exact Gaussian elimination; pivot by largest |numerator|.
  std::vector<int> pivot_col(static_cast<size_t>(rows), -1);
  int rank = 0;
  std::vector<bool> used_col(static_cast<size_t>(cols), false);
  for (int r = 0; r < rows; ++r) {
    int pr = -1, pc = -1;
    mpz_class best = 0;
    for (int rr = rank; rr < rows; ++rr)
      for (int cc = 0; cc < cols; ++cc) {
        const Rat& v = A[static_cast<size_t>(rr)][static_cast<size_t>(cc)];
        if (v.is_zero()) continue;
        mpz_class mag = abs(v.num());
        if (pr < 0 || mag > best) {
          best = mag;
          pr = rr;
          pc = cc;
        }
      }
    if (pr < 0) break;
    std::swap(A[static_cast<size_t>(rank)], A[static_cast<size_t>(pr)]);
    Rat inv = Rat(1) / A[static_cast<size_t>(rank)][static_cast<size_t>(pc)];
    for (auto& v : A[static_cast<size_t>(rank)]) v *= inv;
    for (int rr = 0; rr < rows; ++rr) {
      if (rr == rank) continue;
      Rat fct = A[static_cast<size_t>(rr)][static_cast<size_t>(pc)];
      if (fct.is_zero()) continue;
      for (int cc = 0; cc < cols; ++cc)
        A[static_cast<size_t>(rr)][static_cast<size_t>(cc)] -=
            fct * A[static_cast<size_t>(rank)][static_cast<size_t>(cc)];
    }
    pivot_col[static_cast<size_t>(rank)] = pc;
    used_col[static_cast<size_t>(pc)] = true;
    ++rank;
  }

  // Pick a free column, set it to 1, back-substitute the pivots.
  int free_col = -1;
  for (int cc = 0; cc < cols; ++cc)
    if (!used_col[static_cast<size_t>(cc)]) {
      free_col = cc;
      break;
    }
  if (free_col < 0) throw std::logic_error("pade_form: kernel unexpectedly trivial");
  std::vector<Rat> qc(static_cast<size_t>(cols), Rat(0));
  qc[static_cast<size_t>(free_col)] = Rat(1);
  for (int r = 0; r < rank; ++r) {
    int pc = pivot_col[static_cast<size_t>(r)];
    qc[static_cast<size_t>(pc)] = -A[static_cast<size_t>(r)][static_cast<size_t>(free_col)];
  }

  // Normalize so the first nonzero coefficient of q is 1.
  Rat lead(0);
  for (const auto& v : qc)
    if (!v.is_zero()) {
      lead = v;
      break;
    }
  if (lead.is_zero()) throw std::logic_error("pade_form: zero kernel vector");
  for (auto& v : qc) v /= lead;

  Poly q(qc);
  // p = truncation of q f to degree n.
  std::vector<Rat> pc_(static_cast<size_t>(n) + 1, Rat(0));
  for (int j = 0; j <= n; ++j) {
    Rat acc(0);
    for (int i = 0; i <= std::min(j, m); ++i) acc += q.coeff(i) * f.coeff(j - i);
    pc_[static_cast<size_t>(j)] = acc;
  }
  Poly p(pc_);

  // Post-solve verification: q f - p = O(x^{n+m+1}).
  for (int j = 0; j <= n + m; ++j) {
    Rat acc(0);
    for (int i = 0; i <= std::min(j, m); ++i) acc += q.coeff(i) * f.coeff(j - i);
    acc -= p.coeff(j);
    if (!acc.is_zero()) throw std::logic_error("pade_form: verification failed");
  }
  return PadeForm{std::move(p), std::move(q), n, m};
}

InfinityResidual jacobi_infinity_residual(const JacobiParams& prm, int depth) {
  if (!(prm.a + prm.b).is_integer())
    throw std::invalid_argument("jacobi_infinity_residual: a+b must be an integer");
  long e = (prm.a + prm.b).num().get_si();
  if (prm.n + e < 0)
    throw std::invalid_argument("jacobi_infinity_residual: requires n >= -(a+b)");
  const int n = prm.n;
  const int ne = n + static_cast<int>(e);

  // Work in w = 1/z.  Both terms carry a factor w^{-(n+e)}:
  //   Y1 w^{n+e} = 2^{-e} (1-w)^a (1+w)^b J_n(a,b)^*(w)
  //   Y2 w^{n+e} = J_{n+e}(-a,-b)^*(w)
  // A z-exponent d corresponds to the w-exponent j = n+e-d.
  const int horizon = 2 * n + static_cast<int>(e) + depth;
  Series wfac = weight_series(prm.a, prm.b, horizon);
  Poly jn_star = jacobi(prm).reciprocal(n);
  Series term1 = pow2(-e) * (wfac * Series::from_poly(jn_star, horizon));
  Poly jne_star = jacobi({ne, -prm.a, -prm.b}).reciprocal(ne);
  Series term2 = Series::from_poly(jne_star, horizon);
  Series diff = term1 - term2;

  InfinityResidual out;
  int j0 = diff.valuation();
  if (j0 > diff.order()) {
    out.residual_exponent = std::nullopt;
    out.bound_holds = true;
    return out;
  }
  out.residual_exponent = ne - j0;
  out.bound_holds = *out.residual_exponent <= -(n + 1);
  return out;
}

}  // namespace dz
