#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charslope/laurent.hpp"
#include "charslope/rational.hpp"

namespace charslope {

/// Integer Seifert matrix of a genus-g surface, size 2g x 2g.
/// Construction enforces det(V - V^T) = 1.
class SeifertMatrix {
 public:
  using Entry = std::int64_t;

  /// The unknot (size 0).
  SeifertMatrix() = default;
  /// Throws InvalidSeifertMatrix for non-square, odd-sized, or invalid pairings.
  explicit SeifertMatrix(std::vector<std::vector<Entry>> rows);

  std::size_t size() const { return rows_.size(); }
  int genus() const { return static_cast<int>(rows_.size() / 2); }
  Entry at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<std::vector<Entry>>& rows() const { return rows_; }

  SeifertMatrix transpose() const;
  /// -V^T, the Seifert matrix of the mirror image.
  SeifertMatrix mirror() const;

  std::string to_string() const;

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  std::vector<std::vector<Entry>> rows_;
};

/// Genus-one surface of the pretzel knot P(p, q, r); all parameters odd.
SeifertMatrix pretzel_seifert(long p, long q, long r);

/// Symmetric normalization of det(tV - V^T).
LaurentPoly alexander(const SeifertMatrix& v);

/// Conway polynomial, coeffs[k] multiplies z^k.
struct ConwayPoly {
  std::vector<Integer> coeffs;

  Integer coefficient(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Integer(0); }
  Integer a2() const { return coefficient(2); }
  Integer a4() const { return coefficient(4); }
  std::string to_string() const;
  friend bool operator==(const ConwayPoly&, const ConwayPoly&) = default;
};

ConwayPoly conway(const SeifertMatrix& v);

/// |Delta(-1)|.
Integer determinant(const SeifertMatrix& v);

/// Signature of V + V^T, computed by exact congruence diagonalization.
/// Throws EvaluationAtRootError if V + V^T is singular.
int signature(const SeifertMatrix& v);

/// Tolerance on eigenvalue magnitudes for the floating-point path.
inline constexpr double kSignatureTolerance = 1e-9;

/// Tristram-Levine signature: the signature of (1 - w)V + (1 - conj w)V^T for
/// |w| = 1, w != 1. Routes w == -1 to the exact path; otherwise uses Hermitian
/// eigenvalues with kSignatureTolerance and is advisory only.
int signature_form(const SeifertMatrix& v, std::complex<double> omega);

/// Conjugate roots a +- b i of a Laurent polynomial of s-degree one, stored as
/// (a, b^2) with a^2 + b^2 = 1. Empty when the roots are real and off the circle.
struct UnitCircleRoots {
  std::optional<std::pair<Rational, Rational>> pair;

  bool empty() const { return !pair.has_value(); }
  const Rational& real() const { return pair->first; }
  const Rational& imag_squared() const { return pair->second; }
};

UnitCircleRoots unit_circle_roots(const LaurentPoly& delta);

}  // namespace charslope
