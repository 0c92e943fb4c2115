#ifndef DZ_SPECFUN_HPP
#define DZ_SPECFUN_HPP

#include <optional>

#include "dz/poly.hpp"
#include "dz/series.hpp"

namespace dz {

/// Parameters of a generalized Jacobi polynomial J_n(a, b, x). The a, b are
/// arbitrary rationals; nothing here assumes a, b > -1.
struct JacobiParams {
  int n = 0;
  Rat a;
  Rat b;
};

/// Generalized binomial coefficient C(top, k) as the falling-factorial
/// product top(top-1)...(top-k+1)/k!; k < 0 yields 0.
Rat binom_rat(const Rat& top, int k);

/// J_n(a, b, x) = sum_k C(n+a+b+k, k) C(n+a, n-k) ((x-1)/2)^k.
/// Total for all rational a, b; the degree in x drops below n exactly when
/// a+b is one of -(n+1), ..., -2n.
Poly jacobi(const JacobiParams& p);

/// Coefficient of x^n in J_n(a, b, x): 2^{-n} C(2n+a+b, n).
Rat jacobi_leading(const JacobiParams& p);

bool jacobi_degree_drops(const JacobiParams& p);

/// Left-hand side of the defining differential equation applied to y:
/// (1-x^2) y'' + [b-a-(a+b+2)x] y' + n(n+a+b+1) y. Zero for y = J_n(a,b,x).
Poly jacobi_ode_residual(const JacobiParams& p, const Poly& y);

/// Taylor expansion of (1-x)^a (1+x)^b at 0 up to the given order.
Series weight_series(const Rat& a, const Rat& b, int order);

/// Pade form of order [n/m] for a series f: polynomials (p, q), not both
/// zero, deg p <= n, deg q <= m, with q f - p = O(x^{n+m+1}). The q is
/// normalized so its first nonzero coefficient is 1.
struct PadeForm {
  Poly p;
  Poly q;
  int n = 0;
  int m = 0;
};

/// Solves the homogeneous linear system by exact Gaussian elimination,
/// pivoting on the largest numerator magnitude. Requires f.order() >= n+m.
/// The solution is re-verified against f before returning.
PadeForm pade_form(const Series& f, int n, int m);

/// Result of expanding both sides of the key Jacobi identity at infinity:
///   ((z-1)/2)^a ((z+1)/2)^b J_n(a,b,z) - J_{n+a+b}(-a,-b,z)
/// with the branch of (z-1)^a(z+1)^b normalized to leading coefficient 1.
/// `residual_exponent` is the largest power of z with nonzero coefficient,
/// or nullopt when the difference vanishes identically to the inspected
/// depth. The identity asserts residual_exponent <= -(n+1); `bound_holds`
/// reports that finite check.
struct InfinityResidual {
  std::optional<int> residual_exponent;
  bool bound_holds = false;
};

/// Requires a+b integral and n >= -(a+b); throws otherwise.
/// `depth` controls how far past the bound the tail is inspected.
InfinityResidual jacobi_infinity_residual(const JacobiParams& p, int depth = 10);

}  // namespace dz

#endif
