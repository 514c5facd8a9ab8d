#pragma once

#include "charslope/laurent.hpp"

namespace charslope {

/// Odd pretzel parameters and the derived integer d = (pq + qr + rp + 1)/4.
struct PretzelParams {
  long p;
  long q;
  long r;
  Integer d;

  /// Throws ParityError unless p, q, r are all odd.
  static PretzelParams make(long p, long q, long r);
};

/// Reduced 2-loop polynomial of P(p, q, r).
LaurentPoly pretzel_theta_hat(const PretzelParams& params);

/// Loop-expansion coefficient P_1 = -(t - 2 + t^-1) * theta_hat.
LaurentPoly p1_from_theta(const LaurentPoly& theta_hat);

/// P_0 is the constant 1 for every knot.
inline LaurentPoly p0() { return LaurentPoly::constant(1); }

/// v_3 = theta_hat(1) / 2 (Ohtsuki normalization).
Rational v3_from_theta(const LaurentPoly& theta_hat);

/// lambda_1(S^3_0(K); 0) from the base-delta digits:
/// -d/2 + a2/(2 b1), where delta = b0 - b1 s, p1 = f delta^3 + a2 delta^2 + ...,
/// and d is the constant term of s * f.
/// Throws DegreeError unless delta has s-degree exactly 1.
Rational lambda1_shortcut(const LaurentPoly& delta, const LaurentPoly& p1);

/// lambda_1(S^3_0(K); 0) = -1/2 * Res_{t=0} (1 - t^-1)^2 p1 / delta^3.
Rational lambda1_residue(const LaurentPoly& delta, const LaurentPoly& p1);

}  // namespace charslope
