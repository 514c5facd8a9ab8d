#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "charslope/pi1.hpp"

namespace charslope {

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    int g = std::abs(w[i]);
    os << 'x' << g;
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

void GroupPresentation::validate() const {
  if (ngens < 0) throw DomainError("negative generator count");
  for (const auto& r : relators) {
    for (int x : r) {
      if (x == 0 || std::abs(x) > ngens) {
        throw DomainError("relator letter " + std::to_string(x) + " outside the generator range");
      }
    }
  }
}

std::size_t GroupPresentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators) n += r.size();
  return n;
}

std::string GroupPresentation::to_string() const {
  std::ostringstream os;
  os << '<';
  for (int g = 1; g <= ngens; ++g) os << (g > 1 ? ", " : "") << 'x' << g;
  os << " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) os << (i ? ", " : "") << word_to_string(relators[i]);
  os << '>';
  return os.str();
}

std::string Abelianization::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < free_rank; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Smith normal form diagonal; returns the nonzero invariant factors.
std::vector<Integer> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      Integer q = m[i][t] / m[t][t];
      if (q != 0) {
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      }
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      Integer q = m[t][j] / m[t][t];
      if (q != 0) {
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      }
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // Divisibility: fold any entry not divisible by the pivot into row t.
    bool divisible = true;
    for (std::size_t i = t + 1; i < rows && divisible; ++i) {
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divisible = false;
          break;
        }
      }
    }
    if (!divisible) continue;
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace

Abelianization abelianization(const GroupPresentation& pres) {
  pres.validate();
  IntMatrix m(pres.relators.size(), std::vector<Integer>(static_cast<std::size_t>(pres.ngens), 0));
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    for (int x : pres.relators[i]) m[i][static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  }
  Abelianization out;
  std::vector<Integer> diag = smith_diagonal(std::move(m));
  out.free_rank = pres.ngens - static_cast<int>(diag.size());
  for (const auto& d : diag) {
    if (d > 1) out.torsion.push_back(d);
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

GroupPresentation surgery_presentation(const GroupPresentation& pres, const Word& meridian,
                                       const Word& longitude, long slope) {
  GroupPresentation out = pres;
  Word r;
  Word m_inv = inverse(meridian);
  for (long i = 0; i < std::labs(slope); ++i) {
    const Word& piece = slope >= 0 ? meridian : m_inv;
    r.insert(r.end(), piece.begin(), piece.end());
  }
  r.insert(r.end(), longitude.begin(), longitude.end());
  out.relators.push_back(reduce(r));
  out.validate();
  return out;
}

namespace {

Word cyclic_reduce(Word w) {
  w = reduce(w);
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == -w[b - 1]) {
    ++a;
    --b;
  }
  return Word(w.begin() + static_cast<long>(a), w.begin() + static_cast<long>(b));
}

// Least rotation of w or its inverse; identifies relators up to conjugacy and inversion.
Word canonical_relator(const Word& w) {
  Word best = w;
  for (const Word& base : {w, inverse(w)}) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      Word rot(base.begin() + static_cast<long>(k), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(k));
      if (rot < best) best = rot;
    }
  }
  return best;
}

void normalize(GroupPresentation& p) {
  std::set<Word> seen;
  std::vector<Word> kept;
  for (const auto& r : p.relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    Word key = canonical_relator(c);
    if (seen.insert(key).second) kept.push_back(key);
  }
  std::stable_sort(kept.begin(), kept.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  p.relators = std::move(kept);
}

constexpr std::size_t kTietzeLengthCap = 20000;

bool cyclic_match(const Word& r, const Word& u, std::size_t& at) {
  const std::size_t n = r.size(), k = u.size();
  if (k > n) return false;
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t m = 0;
    while (m < k && r[(s + m) % n] == u[m]) ++m;
    if (m == k) {
      at = s;
      return true;
    }
  }
  return false;
}

// Replaces a cyclic subword u of one relator by v^-1, where uv is a rotation
// of another relator (or its inverse) and |u| > |v|. Returns false if no
// relator can be shortened this way.
bool shorten_once(GroupPresentation& p) {
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    const Word& rj = p.relators[j];
    const std::size_t len = rj.size();
    for (std::size_t k = len; k > len / 2; --k) {
      for (const Word& base : {rj, inverse(rj)}) {
        for (std::size_t rot = 0; rot < len; ++rot) {
          Word w(base.begin() + static_cast<long>(rot), base.end());
          w.insert(w.end(), base.begin(), base.begin() + static_cast<long>(rot));
          Word u(w.begin(), w.begin() + static_cast<long>(k));
          Word v(w.begin() + static_cast<long>(k), w.end());
          for (std::size_t i = 0; i < p.relators.size(); ++i) {
            if (i == j) continue;
            std::size_t at = 0;
            if (!cyclic_match(p.relators[i], u, at)) continue;
            const Word& ri = p.relators[i];
            Word next = inverse(v);
            for (std::size_t m = k; m < ri.size(); ++m) next.push_back(ri[(at + m) % ri.size()]);
            p.relators[i] = next;
            normalize(p);
            return true;
          }
        }
      }
    }
  }
  return false;
}

// Eliminates the generator whose removal leaves the shortest presentation,
// among generators occurring exactly once in some relator.
bool eliminate_once(GroupPresentation& p) {
  std::vector<std::size_t> total(static_cast<std::size_t>(p.ngens) + 1, 0);
  for (const auto& r : p.relators) {
    for (int x : r) ++total[static_cast<std::size_t>(std::abs(x))];
  }
  std::size_t best_cost = 0;
  long best_rel = -1;
  int best_gen = 0;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const Word& r = p.relators[i];
    std::vector<int> count(static_cast<std::size_t>(p.ngens) + 1, 0);
    for (int x : r) ++count[static_cast<std::size_t>(std::abs(x))];
    for (int g = 1; g <= p.ngens; ++g) {
      if (count[static_cast<std::size_t>(g)] != 1) continue;
      std::size_t elsewhere = total[static_cast<std::size_t>(g)] - 1;
      std::size_t cost = p.total_length() - r.size() + elsewhere * (r.size() - 1) - elsewhere;
      if (best_rel < 0 || cost < best_cost) {
        best_cost = cost;
        best_rel = static_cast<long>(i);
        best_gen = g;
      }
    }
  }
  if (best_rel < 0 || best_cost > kTietzeLengthCap) return false;

  Word r = p.relators[static_cast<std::size_t>(best_rel)];
  auto at = std::find_if(r.begin(), r.end(), [&](int x) { return std::abs(x) == best_gen; });
  const int sign = *at > 0 ? 1 : -1;
  // r = u g^s v, so g^s = u^-1 v^-1 (conjugated): g = (v u)^-s.
  Word vu(at + 1, r.end());
  vu.insert(vu.end(), r.begin(), at);
  Word image = sign > 0 ? inverse(vu) : vu;
  Word image_inv = inverse(image);

  GroupPresentation next;
  next.ngens = p.ngens - 1;
  auto renumber = [&](int x) {
    int g = std::abs(x);
    int ng = g > best_gen ? g - 1 : g;
    return x > 0 ? ng : -ng;
  };
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (static_cast<long>(i) == best_rel) continue;
    Word w;
    for (int x : p.relators[i]) {
      if (std::abs(x) == best_gen) {
        const Word& piece = x > 0 ? image : image_inv;
        for (int y : piece) w.push_back(renumber(y));
      } else {
        w.push_back(renumber(x));
      }
    }
    next.relators.push_back(std::move(w));
  }
  normalize(next);
  p = std::move(next);
  return true;
}

// Substitutes a -> a b^e or a -> b^e a when that strictly shortens the
// presentation. Automorphisms of the free group, so the group is unchanged.
bool nielsen_once(GroupPresentation& p) {
  const std::size_t before = p.total_length();
  std::size_t best_len = before;
  GroupPresentation best;
  for (int a = 1; a <= p.ngens; ++a) {
    for (int b = 1; b <= p.ngens; ++b) {
      if (a == b) continue;
      for (int e : {1, -1}) {
        for (bool right : {true, false}) {
          GroupPresentation q;
          q.ngens = p.ngens;
          for (const auto& r : p.relators) {
            Word w;
            for (int x : r) {
              if (x == a) {
                if (right) {
                  w.push_back(a);
                  w.push_back(e * b);
                } else {
                  w.push_back(e * b);
                  w.push_back(a);
                }
              } else if (x == -a) {
                if (right) {
                  w.push_back(-e * b);
                  w.push_back(-a);
                } else {
                  w.push_back(-a);
                  w.push_back(-e * b);
                }
              } else {
                w.push_back(x);
              }
            }
            q.relators.push_back(std::move(w));
          }
          normalize(q);
          if (q.total_length() < best_len) {
            best_len = q.total_length();
            best = std::move(q);
          }
        }
      }
    }
  }
  if (best_len == before) return false;
  p = std::move(best);
  return true;
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& pres) {
  pres.validate();
  GroupPresentation p = pres;
  normalize(p);
  while (true) {
    if (!eliminate_once(p) && !shorten_once(p) && !nielsen_once(p)) break;
  }
  return p;
}

LaurentPoly fox_alexander(const GroupPresentation& pres) {
  pres.validate();
  const int n = pres.ngens;
  if (n <= 1) return LaurentPoly::constant(1);
  if (pres.relators.size() + 1 < static_cast<std::size_t>(n)) {
    throw DomainError("Fox matrix needs at least ngens - 1 relators");
  }
  const std::size_t dim = static_cast<std::size_t>(n - 1);
  std::vector<std::vector<LaurentPoly>> m(dim, std::vector<LaurentPoly>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    int prefix = 0;  // abelianized exponent of the prefix, every generator maps to t
    for (int x : pres.relators[i]) {
      std::size_t g = static_cast<std::size_t>(std::abs(x) - 1);
      if (x > 0) {
        if (g < dim) m[i][g] = m[i][g] + LaurentPoly::monomial(1, prefix);
        ++prefix;
      } else {
        --prefix;
        if (g < dim) m[i][g] = m[i][g] - LaurentPoly::monomial(1, prefix);
      }
    }
  }
  LaurentPoly det = determinant(m);
  if (det.is_zero()) throw DomainError("Fox minor vanishes; not a knot presentation");
  const long span = static_cast<long>(det.min_exponent()) + det.max_exponent();
  if (span % 2 != 0) throw DomainError("Fox minor cannot be centred");
  det = det.shifted(static_cast<int32_t>(-span / 2));
  Rational at_one = det.evaluate(1);
  if (at_one == -1) {
    det = -det;
  } else if (at_one != 1) {
    throw DomainError("Fox minor does not evaluate to +-1 at t = 1");
  }
  return det;
}

}  // namespace charslope
