#include "charslope/floer.hpp"

#include <cstdlib>

#include "charslope/errors.hpp"

namespace charslope {

void HFInputs::validate() const {
  if (dim_hfk_top < 1) throw InconsistencyError("dim HFK^(K,1) must be positive for a genus-one knot");
  if (v0 < 0 || v0_mirror < 0) throw InconsistencyError("V_0 is nonnegative");
  if (delta_t_coeff == 0) throw InconsistencyError("genus-one knots have a nonzero t-coefficient");
  if ((dim_hfk_top - delta_t_coeff) % 2 != 0) {
    throw InconsistencyError("dim HFK^(K,1) must have the parity of its Euler characteristic");
  }
}

CorrectionTerms correction_terms(const HFInputs& in) {
  in.validate();
  CorrectionTerms out{Rational(-2 * in.v0), Rational(1, 2) - 2 * in.v0,
                      Rational(-1, 2) + 2 * in.v0_mirror};
  out.d_half.canonicalize();
  out.d_minus_half.canonicalize();
  return out;
}

HFHatDims hfhat_dims(const HFInputs& in) {
  in.validate();
  if (in.dim_hfk_top < in.v0) {
    throw InconsistencyError("dim HFK^(K,1) < V_0 gives a negative reduced rank");
  }
  long s1 = 2 * (in.dim_hfk_top - in.v0) + 1;
  return HFHatDims{s1, {s1 - 1, s1 + 1}};
}

std::string to_string(ForceVerdict v) {
  switch (v) {
    case ForceVerdict::forced_equal:
      return "forced-equal";
    case ForceVerdict::contradiction:
      return "contradiction";
    case ForceVerdict::not_forced:
      return "not-forced";
  }
  return "unknown";
}

ForceVerdict prop21_force_equality(long dim_k, long dim_j, bool same_euler_char) {
  // The two HF^ counts 2(dim - V_0) + 1 +- 1 must coincide, so 2(dim_k - dim_j) is in {-2, 0, 2}.
  const long doubled = 2 * (dim_k - dim_j);
  if (doubled < -2 || doubled > 2) return ForceVerdict::contradiction;
  if (!same_euler_char) return ForceVerdict::not_forced;
  // Equal Euler characteristics give equal parity, so the doubled difference is a multiple of 4.
  if (std::labs(dim_k - dim_j) % 2 != 0) return ForceVerdict::contradiction;
  return ForceVerdict::forced_equal;
}

}  // namespace charslope
