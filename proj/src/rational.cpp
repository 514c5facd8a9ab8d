#include "charslope/rational.hpp"

#include <cctype>

#include "charslope/errors.hpp"

namespace charslope {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
  }
  if (cleaned.empty()) throw ParseError("empty rational", 0);
  bool negative = false;
  std::size_t i = 0;
  if (cleaned[i] == '+' || cleaned[i] == '-') negative = cleaned[i++] == '-';
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < cleaned.size() && std::isdigit(static_cast<unsigned char>(cleaned[pos]))) ++pos;
    if (pos == start) throw ParseError("expected digits in rational '" + cleaned + "'", pos);
    return Integer(cleaned.substr(start, pos - start));
  };
  Integer num = digits(i);
  Integer den = 1;
  if (i < cleaned.size() && cleaned[i] == '/') {
    ++i;
    std::size_t at = i;
    den = digits(i);
    if (den == 0) throw ParseError("zero denominator in rational", at);
  }
  if (i != cleaned.size()) throw ParseError("trailing characters in rational '" + cleaned + "'", i);
  Rational r(negative ? Integer(-num) : num, den);
  r.canonicalize();
  return r;
}

}  // namespace charslope
