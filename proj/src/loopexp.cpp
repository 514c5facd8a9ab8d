#include "charslope/loopexp.hpp"

#include "charslope/errors.hpp"

namespace charslope {

PretzelParams PretzelParams::make(long p, long q, long r) {
  if (p % 2 == 0 || q % 2 == 0 || r % 2 == 0) throw ParityError("pretzel parameters must all be odd");
  Integer sum = Integer(p) * q + Integer(q) * r + Integer(r) * p;
  if (((sum % 4) + 4) % 4 != 3) throw InternalError("pq + qr + rp must be 3 mod 4 for odd parameters");
  return PretzelParams{p, q, r, (sum + 1) / 4};
}

LaurentPoly pretzel_theta_hat(const PretzelParams& params) {
  const Integer p = params.p, q = params.q, r = params.r;
  Rational scale = Rational((p + q + r) * (4 * params.d + 1) + p * q * r, 16);
  scale.canonicalize();
  Rational slope = Rational(2 * params.d + 1, 3);
  slope.canonicalize();
  LaurentPoly shape = LaurentPoly::constant(-2) - slope * LaurentPoly::s();
  return scale * shape;
}

LaurentPoly p1_from_theta(const LaurentPoly& theta_hat) { return -(LaurentPoly::s() * theta_hat); }

Rational v3_from_theta(const LaurentPoly& theta_hat) {
  Rational v = theta_hat.evaluate(1) / 2;
  v.canonicalize();
  return v;
}

Rational lambda1_shortcut(const LaurentPoly& delta, const LaurentPoly& p1) {
  SPoly ds = to_s_basis(delta);
  if (ds.degree() != 1) throw DegreeError("lambda1 shortcut needs an Alexander polynomial of degree 1");
  const Rational b1 = -ds.coeffs[1];
  DeltaExpansion e = base_delta_expand(p1, delta);
  const Rational d = (LaurentPoly::s() * e.f).coeff(0);
  Rational out = -d / 2 + e.a2 / (2 * b1);
  out.canonicalize();
  return out;
}

Rational lambda1_residue(const LaurentPoly& delta, const LaurentPoly& p1) {
  const LaurentPoly weight = LaurentPoly::parse("1 - 2*t^-1 + t^-2");
  Rational out = -residue_at_zero(weight * p1, delta.pow(3)) / 2;
  out.canonicalize();
  return out;
}

}  // namespace charslope
