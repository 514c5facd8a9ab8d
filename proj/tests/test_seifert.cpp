#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "charslope/errors.hpp"
#include "charslope/seifert.hpp"

using namespace charslope;

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

const SeifertMatrix kWhMinus({{1, 1}, {0, 2}});
const SeifertMatrix kWhPlus({{-1, 1}, {0, 2}});
const SeifertMatrix kTrefoil({{1, 1}, {0, 1}});

std::vector<SeifertMatrix> fixtures() {
  std::vector<SeifertMatrix> out{kWhMinus, kWhPlus, kTrefoil, SeifertMatrix()};
  for (long n = -5; n <= 5; ++n) out.push_back(pretzel_seifert(-3, 3, 2 * n + 1));
  // A genus-2 example: block sum of trefoil and Wh-.
  out.push_back(SeifertMatrix({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 2}}));
  return out;
}

// Substitutes t = x^2 into a Laurent polynomial in t.
LaurentPoly at_x_squared(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.coeffs()) out += LaurentPoly::monomial(c, 2 * e);
  return out;
}

LaurentPoly conway_at_x(const ConwayPoly& c) {
  LaurentPoly z = P("t - t^-1"), out;
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) out += Rational(c.coeffs[k]) * z.pow(static_cast<unsigned>(k));
  return out;
}

}  // namespace

TEST(Seifert, PretzelConstructor) {
  for (long n = -5; n <= 5; ++n) {
    EXPECT_EQ(pretzel_seifert(-3, 3, 2 * n + 1), SeifertMatrix({{0, 2}, {1, n + 2}}));
  }
  EXPECT_EQ(pretzel_seifert(1, 1, 1), SeifertMatrix({{1, 1}, {0, 1}}));
  EXPECT_EQ(pretzel_seifert(-1, 1, -1), SeifertMatrix({{0, 1}, {0, 0}}));
  EXPECT_THROW(pretzel_seifert(-3, 3, 4), ParityError);
  EXPECT_THROW(pretzel_seifert(2, 3, 5), ParityError);
}

TEST(Seifert, RejectsInvalidPairings) {
  EXPECT_THROW(SeifertMatrix({{1, 0}, {0, 1}}), InvalidSeifertMatrix);
  EXPECT_THROW(SeifertMatrix(std::vector<std::vector<SeifertMatrix::Entry>>{{1}}), InvalidSeifertMatrix);
  EXPECT_THROW(SeifertMatrix({{1, 1}, {0}}), InvalidSeifertMatrix);
}

TEST(Seifert, Alexander) {
  for (long n = -5; n <= 5; ++n) {
    EXPECT_EQ(alexander(SeifertMatrix({{0, 2}, {1, n + 2}})), P("-2*t + 5 - 2*t^-1"));
  }
  EXPECT_EQ(alexander(kWhMinus), P("2*t - 3 + 2*t^-1"));
  EXPECT_EQ(alexander(kWhPlus), P("-2*t + 5 - 2*t^-1"));
  EXPECT_EQ(alexander(kTrefoil), P("t - 1 + t^-1"));
  EXPECT_EQ(alexander(pretzel_seifert(-1, 1, -1)), P("1"));
  EXPECT_EQ(alexander(SeifertMatrix()), P("1"));
}

TEST(Seifert, AlexanderNormalizationProperty) {
  for (const auto& v : fixtures()) {
    LaurentPoly d = alexander(v);
    EXPECT_TRUE(d.is_symmetric());
    EXPECT_EQ(d.evaluate(1), 1);
    EXPECT_EQ(alexander(v.mirror()), d);
  }
}

TEST(Seifert, Conway) {
  for (long n = -5; n <= 5; ++n) {
    ConwayPoly c = conway(pretzel_seifert(-3, 3, 2 * n + 1));
    EXPECT_EQ(c.to_string(), "-2*z^2 + 1");
    EXPECT_EQ(c.a2(), -2);
    EXPECT_EQ(c.a4(), 0);
  }
  EXPECT_EQ(conway(SeifertMatrix()).to_string(), "1");
  EXPECT_EQ(conway(kTrefoil).to_string(), "z^2 + 1");
}

TEST(Seifert, ConwaySubstitutionIdentity) {
  for (const auto& v : fixtures()) {
    ConwayPoly c = conway(v);
    EXPECT_EQ(conway_at_x(c), at_x_squared(alexander(v))) << v.to_string();
    EXPECT_EQ(c.coefficient(0), 1);
    for (std::size_t k = 1; k < c.coeffs.size(); k += 2) EXPECT_EQ(c.coeffs[k], 0);
  }
}

TEST(Seifert, Determinant) {
  EXPECT_EQ(determinant(kWhMinus), 7);
  for (long n = -5; n <= 5; ++n) EXPECT_EQ(determinant(pretzel_seifert(-3, 3, 2 * n + 1)), 9);
  EXPECT_EQ(determinant(SeifertMatrix()), 1);
  for (const auto& v : fixtures()) EXPECT_EQ(determinant(v) % 2, 1);
}

TEST(Seifert, Signature) {
  // Convention: V + V^T positive definite for [[1,1],[0,2]].
  EXPECT_EQ(signature_form(kWhMinus, -1), 2);
  EXPECT_EQ(signature_form(kWhMinus.mirror(), -1), -2);
  EXPECT_EQ(signature_form(SeifertMatrix(), -1), 0);
  for (const auto& v : fixtures()) {
    int s = signature_form(v, -1);
    EXPECT_EQ(s % 2, 0);
    EXPECT_EQ(signature_form(v.mirror(), -1), -s);
  }
}

TEST(Seifert, SignatureWithZeroDiagonal) {
  // Pretzel matrices have V + V^T = [[0,3],[3,2n+4]], exercising the zero-pivot branch.
  EXPECT_EQ(signature(pretzel_seifert(-3, 3, -3)), 0);
  EXPECT_EQ(signature(SeifertMatrix({{0, 1}, {0, 0}})), 0);
}

TEST(Seifert, TristramLevineNumericPath) {
  // Roots of 2t - 3 + 2t^-1 sit at angle acos(3/4) ~ 0.7227.
  EXPECT_EQ(signature_form(kWhMinus, std::polar(1.0, 0.3)), 0);
  EXPECT_EQ(signature_form(kWhMinus, std::polar(1.0, M_PI / 2)), 2);
  EXPECT_EQ(signature_form(kWhMinus, std::polar(1.0, M_PI - 0.01)), signature(kWhMinus));
  EXPECT_THROW(signature_form(kWhMinus, std::polar(1.0, std::acos(0.75))), EvaluationAtRootError);
  EXPECT_THROW(signature_form(kWhMinus, {1.0, 0.0}), DomainError);
  EXPECT_THROW(signature_form(kWhMinus, {2.0, 0.0}), DomainError);
}

TEST(Seifert, UnitCircleRoots) {
  UnitCircleRoots r = unit_circle_roots(P("2*t - 3 + 2*t^-1"));
  ASSERT_FALSE(r.empty());
  EXPECT_EQ(r.real(), make_rational(3, 4));
  EXPECT_EQ(r.imag_squared(), make_rational(7, 16));
  EXPECT_TRUE(unit_circle_roots(P("-2*t + 5 - 2*t^-1")).empty());
  UnitCircleRoots tref = unit_circle_roots(P("t - 1 + t^-1"));
  ASSERT_FALSE(tref.empty());
  EXPECT_EQ(tref.real(), make_rational(1, 2));
  EXPECT_EQ(tref.imag_squared(), make_rational(3, 4));
  EXPECT_EQ(tref.real() * tref.real() + tref.imag_squared(), 1);
  EXPECT_THROW(unit_circle_roots(P("1")), DegreeError);
}

TEST(Seifert, PretzelPermutationInvarianceProperty) {
  for (long p = -7; p <= 7; p += 2) {
    for (long q = -7; q <= 7; q += 2) {
      for (long r = -7; r <= 7; r += 2) {
        std::array<long, 3> params{p, q, r};
        LaurentPoly d = alexander(pretzel_seifert(p, q, r));
        ConwayPoly c = conway(pretzel_seifert(p, q, r));
        std::sort(params.begin(), params.end());
        do {
          SeifertMatrix v = pretzel_seifert(params[0], params[1], params[2]);
          EXPECT_EQ(alexander(v), d);
          EXPECT_EQ(conway(v), c);
        } while (std::next_permutation(params.begin(), params.end()));
      }
    }
  }
}
