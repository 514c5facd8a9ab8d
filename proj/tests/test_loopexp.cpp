#include <gtest/gtest.h>

#include "charslope/errors.hpp"
#include "charslope/loopexp.hpp"
#include "support/generators.hpp"

using namespace charslope;
using charslope::testing::Gen;

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

const LaurentPoly kDelta9 = LaurentPoly::parse("-2*t + 5 - 2*t^-1");

LaurentPoly pretzel_p1(long n) { return p1_from_theta(pretzel_theta_hat(PretzelParams::make(-3, 3, 2 * n + 1))); }

}  // namespace

TEST(Loopexp, PretzelParams) {
  EXPECT_EQ(PretzelParams::make(-3, 3, 7).d, -2);
  EXPECT_EQ(PretzelParams::make(1, 1, 1).d, 1);
  EXPECT_THROW(PretzelParams::make(-3, 3, 4), ParityError);
  for (long p = -9; p <= 9; p += 2)
    for (long q = -9; q <= 9; q += 2)
      for (long r = -9; r <= 9; r += 2) EXPECT_NO_THROW(PretzelParams::make(p, q, r));
}

TEST(Loopexp, ThetaHatPretzelFamily) {
  for (long n = -5; n <= 5; ++n) {
    PretzelParams params = PretzelParams::make(-3, 3, 2 * n + 1);
    EXPECT_EQ(params.d, -2);
    EXPECT_EQ(pretzel_theta_hat(params), Rational(-(2 * n + 1)) * P("t - 4 + t^-1"));
  }
}

TEST(Loopexp, ThetaHatTrefoilPretzel) {
  EXPECT_EQ(pretzel_theta_hat(PretzelParams::make(1, 1, 1)), P("-t - t^-1"));
}

TEST(Loopexp, ThetaHatPermutationSymmetry) {
  for (long p = -7; p <= 7; p += 2)
    for (long q = -7; q <= 7; q += 2)
      for (long r = -7; r <= 7; r += 2) {
        LaurentPoly base = pretzel_theta_hat(PretzelParams::make(p, q, r));
        EXPECT_EQ(pretzel_theta_hat(PretzelParams::make(r, q, p)), base);
        EXPECT_EQ(pretzel_theta_hat(PretzelParams::make(q, r, p)), base);
        EXPECT_EQ(pretzel_theta_hat(PretzelParams::make(q, p, r)), base);
      }
}

TEST(Loopexp, P1FromTheta) {
  for (long n = -5; n <= 5; ++n) {
    EXPECT_EQ(pretzel_p1(n), Rational(2 * n + 1) * P("t^2 - 6*t + 10 - 6*t^-1 + t^-2"));
  }
  EXPECT_TRUE(p1_from_theta(LaurentPoly()).is_zero());
  Gen gen(21);
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(p1_from_theta(gen.symmetric(4)).is_symmetric());
  EXPECT_EQ(p0(), P("1"));
}

TEST(Loopexp, V3) {
  for (long n = -5; n <= 5; ++n) {
    EXPECT_EQ(v3_from_theta(pretzel_theta_hat(PretzelParams::make(-3, 3, 2 * n + 1))), 2 * n + 1);
  }
  EXPECT_EQ(v3_from_theta(LaurentPoly()), 0);
  EXPECT_EQ(v3_from_theta(P("-t - t^-1")), -1);
}

TEST(Loopexp, Lambda1PretzelBothRoutes) {
  for (long n = -5; n <= 5; ++n) {
    Rational expected = make_rational(2 * n + 1, 16);
    EXPECT_EQ(lambda1_shortcut(kDelta9, pretzel_p1(n)), expected);
    EXPECT_EQ(lambda1_residue(kDelta9, pretzel_p1(n)), expected);
  }
}

TEST(Loopexp, Lambda1TrivialCases) {
  EXPECT_EQ(lambda1_shortcut(kDelta9, LaurentPoly()), 0);
  EXPECT_EQ(lambda1_residue(kDelta9, LaurentPoly()), 0);
  // P1 = Delta^2 gives a2 = 1, f = 0; b1 = 2.
  EXPECT_EQ(lambda1_shortcut(kDelta9, kDelta9 * kDelta9), make_rational(1, 4));
  EXPECT_EQ(lambda1_residue(kDelta9, kDelta9 * kDelta9), make_rational(1, 4));
  EXPECT_THROW(lambda1_shortcut(P("1"), P("1")), DegreeError);
  EXPECT_THROW(lambda1_shortcut(P("t^2 - 1 + t^-2"), P("1")), DegreeError);
}

TEST(Loopexp, Lambda1OracleEquivalenceProperty) {
  Gen gen(22);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly delta = gen.linear_delta();
    LaurentPoly p1 = gen.symmetric(5);
    EXPECT_EQ(lambda1_shortcut(delta, p1), lambda1_residue(delta, p1))
        << "delta = " << delta.to_string() << ", P1 = " << p1.to_string();
  }
}

TEST(Loopexp, Lambda1LinearInP1Property) {
  Gen gen(23);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly delta = gen.linear_delta();
    LaurentPoly a = gen.symmetric(4), b = gen.symmetric(4);
    Rational c = gen.rational();
    EXPECT_EQ(lambda1_shortcut(delta, a + c * b), lambda1_shortcut(delta, a) + c * lambda1_shortcut(delta, b));
    EXPECT_EQ(lambda1_residue(delta, a + c * b), lambda1_residue(delta, a) + c * lambda1_residue(delta, b));
  }
}

TEST(Loopexp, Lambda1InjectiveOnPretzelFamily) {
  std::vector<Rational> seen;
  for (long n = -20; n <= 20; ++n) {
    Rational value = lambda1_residue(kDelta9, pretzel_p1(n));
    for (const auto& other : seen) EXPECT_NE(value, other);
    seen.push_back(value);
  }
}
