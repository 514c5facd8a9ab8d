#include <gtest/gtest.h>

#include "charslope/errors.hpp"
#include "charslope/floer.hpp"

using namespace charslope;

TEST(Floer, CorrectionTerms) {
  CorrectionTerms zero = correction_terms({2, 0, 0, 2});
  EXPECT_EQ(zero.d_one, 0);
  EXPECT_EQ(zero.d_half, make_rational(1, 2));
  EXPECT_EQ(zero.d_minus_half, make_rational(-1, 2));
  EXPECT_EQ(correction_terms({2, 1, 0, 2}).d_one, -2);
  CorrectionTerms c = correction_terms({2, 2, 1, 2});
  EXPECT_EQ(c.d_one, -4);
  EXPECT_EQ(c.d_half, make_rational(-7, 2));
  EXPECT_EQ(c.d_minus_half, make_rational(3, 2));
}

TEST(Floer, CorrectionTermOffsetIsConstant) {
  for (long v0 = 0; v0 <= 10; ++v0) {
    for (long vm = 0; vm <= 3; ++vm) {
      CorrectionTerms c = correction_terms({12, v0, vm, 2});
      EXPECT_EQ(c.d_half - c.d_one, make_rational(1, 2));
    }
  }
}

TEST(Floer, HFHatDims) {
  HFHatDims a = hfhat_dims({2, 0, 0, 2});
  EXPECT_EQ(a.dim_s1, 5);
  EXPECT_EQ(a.dim_s0_set, (std::array<long, 2>{4, 6}));
  HFHatDims b = hfhat_dims({1, 0, 0, 1});
  EXPECT_EQ(b.dim_s1, 3);
  EXPECT_EQ(b.dim_s0_set, (std::array<long, 2>{2, 4}));
  HFHatDims c = hfhat_dims({1, 1, 0, -1});
  EXPECT_EQ(c.dim_s1, 1);
  EXPECT_EQ(c.dim_s0_set, (std::array<long, 2>{0, 2}));
  EXPECT_THROW(hfhat_dims({1, 2, 0, 1}), InconsistencyError);
}

TEST(Floer, HFHatDimsShapeProperty) {
  for (long dim = 1; dim <= 20; ++dim) {
    for (long v0 = 0; v0 <= dim; ++v0) {
      HFHatDims d = hfhat_dims({dim, v0, 0, dim % 2 == 0 ? 2 : 1});
      EXPECT_EQ(d.dim_s1 % 2, 1);
      EXPECT_EQ(d.dim_s0_set[0] % 2, 0);
      EXPECT_EQ(d.dim_s0_set[1] % 2, 0);
      EXPECT_EQ(d.dim_s0_set[1] - d.dim_s0_set[0], 2);
    }
  }
}

TEST(Floer, InputValidation) {
  EXPECT_THROW(correction_terms({0, 0, 0, 2}), InconsistencyError);
  EXPECT_THROW(correction_terms({2, 0, 0, 1}), InconsistencyError);
  EXPECT_THROW(correction_terms({2, -1, 0, 2}), InconsistencyError);
}

TEST(Floer, ForceEquality) {
  EXPECT_EQ(prop21_force_equality(2, 2, true), ForceVerdict::forced_equal);
  EXPECT_EQ(prop21_force_equality(2, 4, true), ForceVerdict::contradiction);
  EXPECT_EQ(prop21_force_equality(2, 3, false), ForceVerdict::not_forced);
  EXPECT_EQ(to_string(ForceVerdict::forced_equal), "forced-equal");
}

TEST(Floer, ForceEqualityExhaustive) {
  for (long k = 0; k <= 20; ++k) {
    for (long j = 0; j <= 20; ++j) {
      for (bool same : {true, false}) {
        ForceVerdict v = prop21_force_equality(k, j, same);
        if (v == ForceVerdict::forced_equal) EXPECT_EQ(k, j);
        if (same && k == j) EXPECT_EQ(v, ForceVerdict::forced_equal);
        long doubled = 2 * (k - j);
        bool member = doubled == -2 || doubled == 0 || doubled == 2;
        if (!member) EXPECT_EQ(v, ForceVerdict::contradiction);
        // Even and in {-2, 0, 2} after doubling a same-parity difference means zero.
        if (same && member && (k - j) % 2 == 0) EXPECT_EQ(v, ForceVerdict::forced_equal);
      }
    }
  }
}
