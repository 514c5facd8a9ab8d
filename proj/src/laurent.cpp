#include "charslope/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "charslope/errors.hpp"

namespace charslope {

namespace {

LaurentPoly::Exponent checked_add(LaurentPoly::Exponent a, LaurentPoly::Exponent b) {
  LaurentPoly::Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("Laurent exponent overflow");
  return out;
}

LaurentPoly::Exponent checked_neg(LaurentPoly::Exponent a) {
  if (a == std::numeric_limits<LaurentPoly::Exponent>::min()) {
    throw OverflowError("Laurent exponent overflow");
  }
  return -a;
}

}  // namespace

LaurentPoly::LaurentPoly(Coeffs coeffs) {
  for (auto& [e, c] : coeffs) add_term(e, c);
}

LaurentPoly LaurentPoly::constant(const Rational& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Rational& c, Exponent e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::s() {
  return LaurentPoly(Coeffs{{-1, Rational(1)}, {0, Rational(-2)}, {1, Rational(1)}});
}

Rational LaurentPoly::coeff(Exponent e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no exponents");
  return coeffs_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exponent() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no exponents");
  return coeffs_.rbegin()->first;
}

void LaurentPoly::add_term(Exponent e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(checked_add(ea, eb), ca * cb);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, v] : coeffs_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, v] : out.coeffs_) v = -v;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(checked_add(e, k), c);
  return out;
}

LaurentPoly LaurentPoly::involute() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(checked_neg(e), c);
  return out;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (x == 0) throw ZeroEvaluationPointError("cannot evaluate a Laurent polynomial at 0");
  Rational total = 0;
  for (const auto& [e, c] : coeffs_) {
    Rational term = c;
    if (e >= 0) {
      Integer num, den;
      mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
      mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
      term *= Rational(num, den);
    } else {
      Integer num, den;
      auto k = static_cast<unsigned long>(-static_cast<long>(e));
      mpz_pow_ui(num.get_mpz_t(), x.get_den_mpz_t(), k);
      mpz_pow_ui(den.get_mpz_t(), x.get_num_mpz_t(), k);
      Rational factor(num, den);
      factor.canonicalize();
      term *= factor;
    }
    total += term;
  }
  total.canonicalize();
  return total;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) {
    if (e != 0) out.add_term(checked_add(e, -1), c * e);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(c);
    if (e == 0) {
      out += charslope::to_string(mag);
      continue;
    }
    if (mag != 1) out += charslope::to_string(mag) + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty polynomial", 0);
  LaurentPoly out;
  std::size_t pos = 0;
  auto read_digits = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };
  bool first = true;
  while (pos < s.size()) {
    std::size_t term_start = pos;
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", pos);
    }
    first = false;
    Rational coeff = 1;
    bool have_number = false;
    std::string num = read_digits();
    if (!num.empty()) {
      have_number = true;
      Integer n(num);
      Integer d = 1;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::size_t at = pos;
        std::string den = read_digits();
        if (den.empty()) throw ParseError("expected denominator", at);
        d = Integer(den);
        if (d == 0) throw ParseError("zero denominator", at);
      }
      coeff = Rational(n, d);
      coeff.canonicalize();
    }
    bool have_star = false;
    if (pos < s.size() && s[pos] == '*') {
      have_star = true;
      ++pos;
    }
    Exponent exponent = 0;
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        int esign = 1;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
          esign = s[pos] == '-' ? -1 : 1;
          ++pos;
        }
        std::size_t at = pos;
        std::string digits = read_digits();
        if (digits.empty()) throw ParseError("expected exponent", at);
        long long value = 0;
        for (char d : digits) {
          value = value * 10 + (d - '0');
          if (value > std::numeric_limits<Exponent>::max()) throw OverflowError("exponent out of range");
        }
        exponent = static_cast<Exponent>(esign * value);
      }
    } else if (have_star || !have_number) {
      throw ParseError("expected a coefficient or 't'", pos < s.size() ? pos : term_start);
    }
    out.add_term(exponent, sign * coeff);
  }
  return out;
}

LaurentPoly arith(ArithKind kind, const LaurentPoly& p, const LaurentPoly& q) {
  switch (kind) {
    case ArithKind::add:
      return p + q;
    case ArithKind::sub:
      return p - q;
    case ArithKind::mul:
      return p * q;
  }
  throw InternalError("unknown ArithKind");
}

SPoly to_s_basis(const LaurentPoly& p) {
  if (!p.is_symmetric()) throw AsymmetricError("polynomial is not symmetric under t -> t^-1: " + p.to_string());
  SPoly out;
  if (p.is_zero()) return out;
  auto top = p.max_exponent();
  out.coeffs.assign(static_cast<std::size_t>(top) + 1, Rational(0));
  LaurentPoly rest = p;
  for (auto k = top; k >= 0; --k) {
    Rational c = rest.coeff(k);
    if (c == 0) continue;
    out.coeffs[static_cast<std::size_t>(k)] = c;
    rest -= c * LaurentPoly::s().pow(static_cast<unsigned>(k));
  }
  if (!rest.is_zero()) throw InternalError("s-basis conversion left a remainder");
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

LaurentPoly from_s_basis(const SPoly& p) {
  LaurentPoly out;
  LaurentPoly power = LaurentPoly::constant(1);
  const LaurentPoly s = LaurentPoly::s();
  for (const auto& c : p.coeffs) {
    out += c * power;
    power *= s;
  }
  return out;
}

LaurentPoly DeltaExpansion::reconstruct(const LaurentPoly& delta) const {
  LaurentPoly d2 = delta * delta;
  return f * d2 * delta + a2 * d2 + a1 * delta + LaurentPoly::constant(a0);
}

namespace {

// Divides a(s) by (c0 + c1*s); returns the quotient and stores the remainder.
std::vector<Rational> divide_linear(const std::vector<Rational>& a, const Rational& c0,
                                    const Rational& c1, Rational& remainder) {
  if (a.size() <= 1) {
    remainder = a.empty() ? Rational(0) : a[0];
    return {};
  }
  std::size_t m = a.size() - 1;
  std::vector<Rational> q(m);
  q[m - 1] = a[m] / c1;
  for (std::size_t k = m - 1; k >= 1; --k) q[k - 1] = (a[k] - c0 * q[k]) / c1;
  remainder = a[0] - c0 * q[0];
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

}  // namespace

DeltaExpansion base_delta_expand(const LaurentPoly& p, const LaurentPoly& delta) {
  SPoly ds = to_s_basis(delta);
  if (ds.degree() != 1) {
    throw DegreeError("base-delta expansion needs delta of s-degree 1, got " + std::to_string(ds.degree()));
  }
  SPoly ps = to_s_basis(p);
  const Rational& c0 = ds.coeffs[0];
  const Rational& c1 = ds.coeffs[1];
  Rational digits[3];
  std::vector<Rational> rest = ps.coeffs;
  for (auto& digit : digits) rest = divide_linear(rest, c0, c1, digit);
  DeltaExpansion out{from_s_basis(SPoly{rest}), digits[2], digits[1], digits[0]};
  if (out.reconstruct(delta) != p) throw InternalError("base-delta expansion failed to reconstruct");
  return out;
}

Rational residue_at_zero(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw ZeroDenominatorError("residue with zero denominator");
  if (num.is_zero()) return 0;
  // num/den = t^(m-k) * n(t)/q(t) with n(0), q(0) nonzero.
  const auto k = den.min_exponent();
  const auto m = num.min_exponent();
  const long target = static_cast<long>(k) - static_cast<long>(m) - 1;
  if (target < 0) return 0;
  LaurentPoly q = den.shifted(checked_neg(k));
  LaurentPoly n = num.shifted(checked_neg(m));
  const auto order = static_cast<std::size_t>(target);
  std::vector<Rational> inv(order + 1);
  const Rational q0 = q.coeff(0);
  inv[0] = 1 / q0;
  for (std::size_t i = 1; i <= order; ++i) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= i; ++j) {
      Rational qj = q.coeff(static_cast<LaurentPoly::Exponent>(j));
      if (qj != 0) acc += qj * inv[i - j];
    }
    inv[i] = -acc / q0;
  }
  Rational result = 0;
  for (std::size_t j = 0; j <= order; ++j) {
    Rational nj = n.coeff(static_cast<LaurentPoly::Exponent>(j));
    if (nj != 0) result += nj * inv[order - j];
  }
  result.canonicalize();
  return result;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational factor = m[row][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  det.canonicalize();
  return det;
}

LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(1);
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  }
  // Shift each row into polynomial range, interpolate the polynomial
  // determinant, then undo the shift.
  std::vector<std::vector<LaurentPoly>> rows = m;
  long total_shift = 0;
  long degree_bound = 0;
  for (auto& row : rows) {
    bool any = false;
    LaurentPoly::Exponent lo = 0, hi = 0;
    for (const auto& entry : row) {
      if (entry.is_zero()) continue;
      lo = any ? std::min(lo, entry.min_exponent()) : entry.min_exponent();
      hi = any ? std::max(hi, entry.max_exponent()) : entry.max_exponent();
      any = true;
    }
    if (!any) return LaurentPoly();
    for (auto& entry : row) entry = entry.shifted(checked_neg(lo));
    total_shift += lo;
    degree_bound += static_cast<long>(hi) - lo;
  }
  const auto points = static_cast<std::size_t>(degree_bound) + 1;
  std::vector<Rational> xs(points), ys(points);
  for (std::size_t i = 0; i < points; ++i) {
    xs[i] = static_cast<long>(i);
    std::vector<std::vector<Rational>> numeric(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Rational value = 0;
        for (const auto& [e, coeff] : rows[r][c].coeffs()) {
          Integer power;
          mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(e));
          value += coeff * power;
        }
        numeric[r][c] = value;
      }
    }
    ys[i] = determinant(std::move(numeric));
  }
  // Newton divided differences, then expand into the monomial basis.
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < points; ++level) {
    for (std::size_t i = points - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  std::vector<Rational> poly{dd[points - 1]};
  for (std::size_t k = points - 1; k-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= xs[k] * poly[j];
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  LaurentPoly out;
  for (std::size_t j = 0; j < poly.size(); ++j) {
    out += LaurentPoly::monomial(poly[j], static_cast<LaurentPoly::Exponent>(j));
  }
  if (total_shift > std::numeric_limits<LaurentPoly::Exponent>::max() ||
      total_shift < std::numeric_limits<LaurentPoly::Exponent>::min()) {
    throw OverflowError("determinant exponent shift out of range");
  }
  return out.shifted(static_cast<LaurentPoly::Exponent>(total_shift));
}

}  // namespace charslope
