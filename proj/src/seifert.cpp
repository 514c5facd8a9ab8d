#include "charslope/seifert.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "charslope/errors.hpp"

namespace charslope {

namespace {

std::vector<std::vector<Rational>> to_rational(const SeifertMatrix& v, bool symmetrize) {
  const std::size_t n = v.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long value = v.at(i, j) + (symmetrize ? v.at(j, i) : 0);
      m[i][j] = value;
    }
  }
  return m;
}

// Sylvester inertia of a symmetric rational matrix: (positive, negative, zero).
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

Inertia inertia(std::vector<std::vector<Rational>> a) {
  Inertia out;
  std::size_t n = a.size();
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (alive[i] && a[i][i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) {
      // Zero diagonal: a_ii = a_jj = 0 but a_ij != 0 lets row/col i += row/col j.
      bool found = false;
      for (std::size_t i = 0; i < n && !found; ++i) {
        if (!alive[i]) continue;
        for (std::size_t j = 0; j < n && !found; ++j) {
          if (!alive[j] || j == i || a[i][j] == 0) continue;
          for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
          for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
          pivot = i;
          found = true;
        }
      }
      if (!found) {
        out.zero += static_cast<int>(remaining);
        break;
      }
    }
    const Rational p = a[pivot][pivot];
    (p > 0 ? out.positive : out.negative) += 1;
    alive[pivot] = false;
    --remaining;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i] || a[i][pivot] == 0) continue;
      Rational factor = a[i][pivot] / p;
      for (std::size_t k = 0; k < n; ++k) {
        if (alive[k]) a[i][k] -= factor * a[pivot][k];
      }
    }
  }
  return out;
}

}  // namespace

SeifertMatrix::SeifertMatrix(std::vector<std::vector<Entry>> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  if (n % 2 != 0) throw InvalidSeifertMatrix("Seifert matrix must have even size");
  for (const auto& row : rows_) {
    if (row.size() != n) throw InvalidSeifertMatrix("Seifert matrix must be square");
  }
  std::vector<std::vector<Rational>> pairing(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pairing[i][j] = rows_[i][j] - rows_[j][i];
  }
  if (charslope::determinant(pairing) != 1) {
    throw InvalidSeifertMatrix("det(V - V^T) must be 1 for a knot Seifert matrix: " + to_string());
  }
}

SeifertMatrix SeifertMatrix::transpose() const {
  std::vector<std::vector<Entry>> t(size(), std::vector<Entry>(size()));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) t[j][i] = rows_[i][j];
  SeifertMatrix out;
  out.rows_ = std::move(t);
  return out;
}

SeifertMatrix SeifertMatrix::mirror() const {
  SeifertMatrix out = transpose();
  for (auto& row : out.rows_)
    for (auto& x : row) x = -x;
  return out;
}

std::string SeifertMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) os << ", ";
      os << rows_[i][j];
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

SeifertMatrix pretzel_seifert(long p, long q, long r) {
  if (p % 2 == 0 || q % 2 == 0 || r % 2 == 0) {
    throw ParityError("pretzel parameters must all be odd");
  }
  return SeifertMatrix({{(p + q) / 2, (q + 1) / 2}, {(q - 1) / 2, (q + r) / 2}});
}

LaurentPoly alexander(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = LaurentPoly::monomial(v.at(i, j), 1) - LaurentPoly::constant(v.at(j, i));
    }
  }
  LaurentPoly delta = determinant(m).shifted(-v.genus());
  if (!delta.is_symmetric() || delta.evaluate(1) != 1) {
    throw InternalError("Alexander polynomial failed normalization: " + delta.to_string());
  }
  return delta;
}

std::string ConwayPoly::to_string() const {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Integer& c = coeffs[k];
    if (c == 0) continue;
    bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Integer mag = abs(c);
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "z";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

ConwayPoly conway(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  // det(xV - x^-1 V^T) is invariant under x -> -x^-1, hence a polynomial in z = x - x^-1.
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = LaurentPoly::monomial(v.at(i, j), 1) - LaurentPoly::monomial(v.at(j, i), -1);
    }
  }
  LaurentPoly rest = determinant(m);
  const LaurentPoly z = LaurentPoly::parse("t - t^-1");
  ConwayPoly out;
  while (!rest.is_zero()) {
    auto k = rest.max_exponent();
    if (k < 0) throw InternalError("Conway conversion left negative powers");
    Rational c = rest.coeff(k);
    if (c.get_den() != 1) throw InternalError("Conway polynomial has non-integer coefficient");
    if (out.coeffs.size() <= static_cast<std::size_t>(k)) out.coeffs.resize(static_cast<std::size_t>(k) + 1);
    out.coeffs[static_cast<std::size_t>(k)] = c.get_num();
    rest -= c * z.pow(static_cast<unsigned>(k));
  }
  return out;
}

Integer determinant(const SeifertMatrix& v) {
  Rational value = alexander(v).evaluate(-1);
  return abs(value.get_num());
}

int signature(const SeifertMatrix& v) {
  Inertia in = inertia(to_rational(v, true));
  if (in.zero != 0) throw EvaluationAtRootError("V + V^T is singular; -1 is a root of the Alexander polynomial");
  return in.positive - in.negative;
}

int signature_form(const SeifertMatrix& v, std::complex<double> omega) {
  if (omega == std::complex<double>(-1.0, 0.0)) return signature(v);
  if (std::abs(std::abs(omega) - 1.0) > kSignatureTolerance) {
    throw DomainError("Tristram-Levine signature needs |omega| = 1");
  }
  if (std::abs(omega - 1.0) <= kSignatureTolerance) {
    throw DomainError("Tristram-Levine signature is undefined at omega = 1");
  }
  const auto n = static_cast<Eigen::Index>(v.size());
  if (n == 0) return 0;
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      auto vij = static_cast<double>(v.at(i, j));
      auto vji = static_cast<double>(v.at(j, i));
      h(i, j) = (1.0 - omega) * vij + (1.0 - std::conj(omega)) * vji;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  int sig = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double ev = solver.eigenvalues()(i);
    if (std::abs(ev) < kSignatureTolerance) {
      throw EvaluationAtRootError("Hermitian form is singular at the requested omega");
    }
    sig += ev > 0 ? 1 : -1;
  }
  return sig;
}

UnitCircleRoots unit_circle_roots(const LaurentPoly& delta) {
  SPoly ds = to_s_basis(delta);
  if (ds.degree() != 1) throw DegreeError("unit_circle_roots needs an s-degree 1 polynomial");
  // c0 + c1 s = 0  <=>  t^2 - (sigma + 2) t + 1 = 0 with sigma = -c0/c1.
  Rational sigma = -ds.coeffs[0] / ds.coeffs[1];
  Rational trace = sigma + 2;
  Rational disc = trace * trace - 4;
  UnitCircleRoots out;
  if (disc > 0) return out;
  Rational a = trace / 2;
  Rational b2 = 1 - a * a;
  a.canonicalize();
  b2.canonicalize();
  out.pair = std::make_pair(a, b2);
  return out;
}

}  // namespace charslope
