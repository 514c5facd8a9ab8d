#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace charslope {

using Integer = mpz_class;
using Rational = mpq_class;

// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q"; throws ParseError otherwise or on q == 0.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace charslope
