#include "dz/hall.hpp"

#include <stdexcept>

#include "dz/seriesgen.hpp"

namespace dz::hall {

std::vector<PellSolution> pell_solutions(int count) {
  if (count < 1) throw std::invalid_argument("pell_solutions: count >= 1");
  std::vector<PellSolution> out;
  mpz_class u = 2, v = 1;
  for (int i = 0; i < count; ++i) {
    if (u * u - 2 * v * v != 2) throw std::logic_error("pell invariant broken");
    out.push_back({u, v});
    mpz_class nu = 3 * u + 4 * v;
    mpz_class nv = 2 * u + 3 * v;
    u = nu;
    v = nv;
  }
  return out;
}

HallDerivation derive_identity() {
  // series_D(1,1) gives the base identity A^3 - B^2 C = 1728 x - 8640.
  auto quads = dz::gen::series_D_quadratics(1, 1);
  DZPair base = dz::gen::series_D(1, 1);

  // substitute x = 2z into each quadratic and divide by 2
  Poly two_z = Poly::monomial(Rat(2), 1);
  HallDerivation d;
  d.a = Rat(1, 2) * quads.A.compose(two_z);
  d.bq = Rat(1, 2) * quads.B.compose(two_z);
  d.c = Rat(1, 2) * quads.C.compose(two_z);
  d.rhs = Rat(1, 8) * base.R.compose(two_z);

  // exact identity a^3 - bq^2 c = rhs
  Poly lhs = d.a.pow(3) - d.bq.pow(2) * d.c;
  if (lhs != d.rhs) throw std::logic_error("hall identity re-derivation failed");

  // c(z) - 2(z+3)^2 must be the Pell constant 2
  Poly pell_gap = d.c - Rat(2) * Poly::linear(Rat(1), Rat(3)).pow(2);
  if (!(pell_gap == Poly::constant(Rat(2))))
    throw std::logic_error("hall: square completion of c(z) failed");

  Poly printed_c({Rat(20), Rat(-12), Rat(2)});
  d.printed_c_matches = (d.c == printed_c);
  d.note = d.printed_c_matches
               ? "re-derived factor matches the printed 2z^2-12z+20"
               : "re-derived factor is 2z^2+12z+20 (printed 2z^2-12z+20 has the "
                 "wrong sign); square completion uses v = z+3, not z-3";
  return d;
}

std::vector<HallPair> hall_pairs(int count) {
  if (count < 1) throw std::invalid_argument("hall_pairs: count >= 1");
  HallDerivation d = derive_identity();
  std::vector<HallPair> out;
  mpz_class u = 2, v = 1;
  while (static_cast<int>(out.size()) < count) {
    mpz_class z = v - 3;  // from c(z) = 2(z+3)^2 + 2 = u^2 with v = z+3
    mpz_class a = 2 * z * z - 10;
    if (a > 0) {
      mpz_class b = (2 * z * z - 6 * z + 2) * u;
      if (b < 0) b = -b;
      mpz_class gap = a * a * a - b * b;
      if (gap != 432 * z - 1080)
        throw std::logic_error("hall_pairs: gap identity failed");
      if (gap * gap > 2 * 216 * 216 * a)
        throw std::logic_error("hall_pairs: squared bound failed");
      out.push_back({a, b, gap, z});
    }
    mpz_class nu = 3 * u + 4 * v;
    mpz_class nv = 2 * u + 3 * v;
    u = nu;
    v = nv;
  }
  return out;
}

}  // namespace dz::hall
