#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "charslope/rational.hpp"

namespace charslope {

/// Laurent polynomial in one variable t with exact rational coefficients.
///
/// The coefficient map never stores zeros, so the zero polynomial is the
/// empty map and equality is plain map equality.
class LaurentPoly {
 public:
  using Exponent = std::int32_t;
  using Coeffs = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(Coeffs coeffs);

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(const Rational& c, Exponent e);
  /// t - 2 + t^-1, the square of t^(1/2) - t^(-1/2).
  static LaurentPoly s();

  const Coeffs& coeffs() const { return coeffs_; }
  Rational coeff(Exponent e) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest and highest exponent. Both throw DomainError on the zero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  LaurentPoly pow(unsigned n) const;
  /// Multiply by t^k.
  LaurentPoly shifted(Exponent k) const;
  /// Substitution t -> t^-1.
  LaurentPoly involute() const;
  bool is_symmetric() const { return involute() == *this; }
  /// Exact value at a nonzero rational point.
  Rational evaluate(const Rational& x) const;
  /// d/dt.
  LaurentPoly derivative() const;

  /// Text form such as "-2*t + 5 - 2*t^-1".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(Exponent e, const Rational& c);
  Coeffs coeffs_;
};

enum class ArithKind { add, sub, mul };

LaurentPoly arith(ArithKind kind, const LaurentPoly& p, const LaurentPoly& q);

/// Polynomial in s = t - 2 + t^-1; coeffs[i] multiplies s^i.
/// Trailing coefficient is nonzero; the zero polynomial is empty.
struct SPoly {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const SPoly&, const SPoly&) = default;
};

/// Rewrites a symmetric Laurent polynomial in powers of s.
/// Throws AsymmetricError when involute(p) != p.
SPoly to_s_basis(const LaurentPoly& p);
LaurentPoly from_s_basis(const SPoly& p);

/// p = f * delta^3 + a2 * delta^2 + a1 * delta + a0.
struct DeltaExpansion {
  LaurentPoly f;
  Rational a2;
  Rational a1;
  Rational a0;

  LaurentPoly reconstruct(const LaurentPoly& delta) const;
};

/// Base-delta expansion for delta of s-degree exactly one.
/// Throws DegreeError if delta is not linear in s, AsymmetricError if either
/// input is not symmetric.
DeltaExpansion base_delta_expand(const LaurentPoly& p, const LaurentPoly& delta);

/// Coefficient of t^-1 in the Laurent expansion of num/den about t = 0.
/// Throws ZeroDenominatorError when den is zero.
Rational residue_at_zero(const LaurentPoly& num, const LaurentPoly& den);

/// Determinant of a square matrix of Laurent polynomials, computed exactly by
/// evaluation at integer points and interpolation. An empty matrix has
/// determinant 1.
LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m);

/// Determinant of a square rational matrix by exact Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace charslope
