#include <map>

#include "charslope/pi1.hpp"

namespace charslope {

namespace {

using Slot = std::pair<int, int>;  // crossing, position

// Follows a closed strand through crossings given as edge ids per slot.
// Returns the entry slot of every visit in order.
std::vector<Slot> walk(const std::vector<std::array<int, 4>>& xs, Slot start) {
  std::map<int, std::vector<Slot>> occ;
  for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
    for (int p = 0; p < 4; ++p) occ[xs[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)]].push_back({c, p});
  }
  for (const auto& [edge, where] : occ) {
    if (where.size() != 2) throw PdCodeError("edge " + std::to_string(edge) + " is not closed up");
  }
  std::vector<Slot> visits;
  Slot at = start;
  do {
    visits.push_back(at);
    if (visits.size() > 2 * xs.size()) throw PdCodeError("diagram walk does not close up");
    Slot exit{at.first, (at.second + 2) % 4};
    const auto& ends = occ[xs[static_cast<std::size_t>(exit.first)][static_cast<std::size_t>(exit.second)]];
    at = ends[0] == exit ? ends[1] : ends[0];
  } while (at != start);
  return visits;
}

}  // namespace

PDCode mirror_pd(const PDCode& pd) {
  if (pd.size() == 0) return pd;
  auto visits = walk(pd.crossings, {0, 0});
  if (visits.size() != 2 * pd.size()) throw MultiComponentError("PD code has more than one component");
  PDCode out = pd;
  for (auto [c, p] : visits) {
    if (p == 0 || p == 2) continue;
    const auto& x = pd.crossings[static_cast<std::size_t>(c)];
    auto& y = out.crossings[static_cast<std::size_t>(c)];
    for (int k = 0; k < 4; ++k) y[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>((p + k) % 4)];
  }
  return out;
}

int DiagramBuilder::fresh() {
  int e = static_cast<int>(parent_.size());
  parent_.push_back(e);
  return e;
}

int DiagramBuilder::find(int e) const {
  while (parent_[static_cast<std::size_t>(e)] != e) e = parent_[static_cast<std::size_t>(e)];
  return e;
}

void DiagramBuilder::cup(std::size_t i) {
  if (i > level_.size()) throw PdCodeError("cup position out of range");
  int e = fresh();
  level_.insert(level_.begin() + static_cast<std::ptrdiff_t>(i), {e, e});
}

void DiagramBuilder::cap(std::size_t i) {
  if (i + 1 >= level_.size()) throw PdCodeError("cap position out of range");
  parent_[static_cast<std::size_t>(find(level_[i]))] = find(level_[i + 1]);
  level_.erase(level_.begin() + static_cast<std::ptrdiff_t>(i), level_.begin() + static_cast<std::ptrdiff_t>(i) + 2);
}

void DiagramBuilder::cross(std::size_t i, Kind kind) {
  if (i + 1 >= level_.size()) throw PdCodeError("crossing position out of range");
  int bl = level_[i], br = level_[i + 1];
  int tl = fresh(), tr = fresh();
  // Slots run counterclockwise with the under-strand on positions 0 and 2.
  if (kind == Kind::negative) {
    crossings_.push_back({bl, br, tr, tl});
  } else {
    crossings_.push_back({br, tr, tl, bl});
  }
  level_[i] = tl;
  level_[i + 1] = tr;
}

PDCode DiagramBuilder::finish() const {
  if (!level_.empty()) throw PdCodeError("diagram has open strands");
  PDCode pd;
  if (crossings_.empty()) return pd;
  std::vector<std::array<int, 4>> xs = crossings_;
  for (auto& x : xs) {
    for (int& e : x) e = find(e);
  }
  auto visits = walk(xs, {0, 0});
  const int n = static_cast<int>(xs.size());
  if (static_cast<int>(visits.size()) != 2 * n) throw MultiComponentError("diagram has more than one component");
  std::vector<std::array<int, 4>> label(static_cast<std::size_t>(n));
  std::vector<int> under_entry(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < 2 * n; ++k) {
    auto [c, p] = visits[static_cast<std::size_t>(k)];
    label[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)] = k + 1;
    label[static_cast<std::size_t>(c)][static_cast<std::size_t>((p + 2) % 4)] = (k + 1) % (2 * n) + 1;
    if (p % 2 == 0) under_entry[static_cast<std::size_t>(c)] = p;
  }
  for (int c = 0; c < n; ++c) {
    std::array<int, 4> x{};
    int rot = under_entry[static_cast<std::size_t>(c)];
    for (int k = 0; k < 4; ++k) x[static_cast<std::size_t>(k)] = label[static_cast<std::size_t>(c)][static_cast<std::size_t>((rot + k) % 4)];
    pd.crossings.push_back(x);
  }
  return pd;
}

PDCode pretzel_pd(long p, long q, long r) {
  if (p % 2 == 0 || q % 2 == 0 || r % 2 == 0) throw ParityError("pretzel parameters must all be odd");
  DiagramBuilder b;
  b.cup(0);
  b.cup(1);
  b.cup(3);
  const long twists[3] = {p, q, r};
  for (std::size_t k = 0; k < 3; ++k) {
    auto kind = twists[k] > 0 ? DiagramBuilder::Kind::positive : DiagramBuilder::Kind::negative;
    for (long i = 0; i < std::labs(twists[k]); ++i) b.cross(2 * k, kind);
  }
  b.cap(3);
  b.cap(1);
  b.cap(0);
  return b.finish();
}

}  // namespace charslope
