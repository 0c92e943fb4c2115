#ifndef DZ_SERIESGEN_HPP
#define DZ_SERIESGEN_HPP

#include <optional>
#include <string>
#include <vector>

#include "dz/dzpair.hpp"
#include "dz/specfun.hpp"
#include "dz/verify.hpp"

namespace dz::gen {

/// Star trees: k edges of weight s and one of weight t, gcd(s,t) = 1.
/// P = x^{ks+t}, Q = (x-1)^t A^s with A* the truncated binomial series of
/// (1-x)^{-t/s}.
DZPair series_A(int s, int t, int k);

/// Fork trees. P = A^{2s+t}, Q = B^{s+t} C^s with the three printed
/// quadratics.
DZPair series_D(int s, int t);
struct DQuadratics {
  Poly A, B, C;
};
DQuadratics series_D_quadratics(int s, int t);

/// Double brushes via generalized Jacobi polynomials. The data struct keeps
/// the Jacobi ingredients for the Pade-form cross-check.
struct ESeriesData {
  DZPair pair;
  Rat a, b;       // weight-function parameters
  Poly A, B;      // inner/outer Jacobi polynomials
  int deg_A = 0;  // declared degrees for reciprocals
  int deg_B = 0;
};
ESeriesData series_E_even_data(int s, int t, int k, int l, int r);
ESeriesData series_E_odd_data(int s, int t, int k, int l, int r);
DZPair series_E_even(int s, int t, int k, int l, int r);
DZPair series_E_odd(int s, int t, int k, int l, int r);

/// Diameter-3 trees: the odd E series at r = 0 with (s,t) -> (t, s-t).
DZPair series_C(int s, int t, int k, int l);

/// Diameter-4 ordinary trees, backward recurrence on the coefficients of A.
DZPair series_F(int k, int l, int m);

/// Diameter-4 trees with one double edge; R = c (x-1) with c fixed by
/// requiring x^k | P - R.
DZPair series_G(int k, int m);

/// Compositions 4S(1-S) of the beta-integral Shabat polynomial S.
DZPair series_H(int k, int l);

/// Compositions 1 - S^3 with S normalized to critical values (-1±√-3)/2.
DZPair series_I(int k);

/// Even trees from the truncated square root of (1+x)^4 (1+(2k+4)x^2)^{2k+1}.
DZPair series_J(int k);

/// Q = (x+1)^{2p-1} (x-1)^{2q-1} split at degree p+q; the orbit member that
/// is self-dual.
DZPair self_dual_series(int p, int q);

enum class SplitVariant { kSymmetric, kAsymmetric };

/// Attached to results built from a printed closed form that failed its own
/// verification and had to be repaired.
struct ErratumNote {
  bool printed_form_valid = true;
  /// Taylor residuals of the printed f at 0: f(0)-1, f'(0), f''(0), f'''(0).
  std::vector<Rat> printed_residuals;
  std::string note;
};

/// Belyi functions of the two trees with passport (k^2, 4^1 1^{2k-4}).
/// The symmetric form is used as printed. The asymmetric printed form fails
/// its defining conditions for every k; the constructor records the failure
/// in `erratum` and derives the correct function from the conditions
/// themselves (vertex positions anchored to the printed numerator).
DZPair split_orbit_belyi(int k, SplitVariant variant,
                         ErratumNote* erratum = nullptr);

/// Substitutes x^d into P, Q, R and re-certifies. Failure throws
/// CertificationError carrying the failing report.
DZPair power_lift(const DZPair& pair, int d);

/// P -> vscale * P(scale*x + shift) applied to P, Q, R; re-certified.
DZPair affine_normalize(const DZPair& pair, const Rat& shift, const Rat& scale,
                        const Rat& vscale);

/// Certification helper every constructor funnels through.
DZPair certify(const Poly& P, const Poly& Q, const std::string& provenance);

}  // namespace dz::gen

#endif
