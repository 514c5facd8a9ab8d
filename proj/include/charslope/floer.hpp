#pragma once

#include <array>
#include <string>

#include "charslope/rational.hpp"

namespace charslope {

/// Symbolic Heegaard Floer inputs for a genus-one knot.
struct HFInputs {
  long dim_hfk_top;   // dim HFK^(K, 1)
  long v0;            // V_0(K)
  long v0_mirror;     // V_0(mirror K)
  long delta_t_coeff; // t^1 coefficient of Delta_K

  /// Throws InconsistencyError when the fields violate the parity and sign constraints.
  void validate() const;
};

struct CorrectionTerms {
  Rational d_one;         // d(S^3_1(K))
  Rational d_half;        // d_{1/2}(S^3_0(K))
  Rational d_minus_half;  // d_{-1/2}(S^3_0(K))
};

CorrectionTerms correction_terms(const HFInputs& in);

struct HFHatDims {
  long dim_s1;                    // dim HF^(S^3_1(K)), always odd
  std::array<long, 2> dim_s0_set; // the two possible values of dim HF^(S^3_0(K))
};

/// Throws InconsistencyError if dim_hfk_top < v0.
HFHatDims hfhat_dims(const HFInputs& in);

enum class ForceVerdict { forced_equal, contradiction, not_forced };

std::string to_string(ForceVerdict v);

/// Decides whether S^3_0(K) = S^3_0(J) (with equal Delta and V_0) forces
/// dim HFK^(K,1) = dim HFK^(J,1).
ForceVerdict prop21_force_equality(long dim_k, long dim_j, bool same_euler_char);

}  // namespace charslope
