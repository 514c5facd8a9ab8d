#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "charslope/pi1.hpp"

namespace charslope {

std::string PDCode::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    if (i) os << ' ';
    const auto& x = crossings[i];
    os << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
  }
  return os.str();
}

PDCode parse_pd(std::string_view text) {
  PDCode pd;
  std::size_t pos = 0;
  auto is_open = [](char c) { return c == '(' || c == '[' || c == '{'; };
  auto is_close = [](char c) { return c == ')' || c == ']' || c == '}'; };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    char c = text[pos];
    if (c == ',' || is_close(c)) {
      ++pos;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // Tags like X or PD must introduce a bracket.
      while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
      skip_space();
      if (pos >= text.size() || !is_open(text[pos])) throw ParseError("expected '(' after crossing tag", pos);
      continue;
    }
    if (!is_open(c)) throw ParseError(std::string("unexpected character '") + c + "' in PD code", pos);
    ++pos;
    skip_space();
    if (pos < text.size() && (is_open(text[pos]) || std::isalpha(static_cast<unsigned char>(text[pos])))) {
      continue;  // outer list bracket
    }
    std::vector<long> labels;
    while (true) {
      skip_space();
      if (pos >= text.size()) throw ParseError("unterminated crossing tuple", pos);
      if (is_close(text[pos])) {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      if (text[pos] == '-' || text[pos] == '+') ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start || !std::isdigit(static_cast<unsigned char>(text[pos - 1]))) {
        throw ParseError("expected an integer edge label", start);
      }
      labels.push_back(std::stol(std::string(text.substr(start, pos - start))));
    }
    if (labels.size() != 4) {
      throw PdCodeError("crossing " + std::to_string(pd.crossings.size() + 1) + " has " +
                        std::to_string(labels.size()) + " labels, expected 4");
    }
    std::array<int, 4> x{};
    for (int i = 0; i < 4; ++i) x[i] = static_cast<int>(labels[i]);
    pd.crossings.push_back(x);
  }
  const long edges = 2 * static_cast<long>(pd.crossings.size());
  std::vector<int> seen(static_cast<std::size_t>(edges) + 1, 0);
  for (const auto& x : pd.crossings) {
    for (int label : x) {
      if (label < 1 || label > edges) {
        throw PdCodeError("edge label " + std::to_string(label) + " outside 1.." + std::to_string(edges));
      }
      ++seen[static_cast<std::size_t>(label)];
    }
  }
  for (long label = 1; label <= edges; ++label) {
    if (seen[static_cast<std::size_t>(label)] != 2) {
      throw PdCodeError("edge label " + std::to_string(label) + " occurs " +
                        std::to_string(seen[static_cast<std::size_t>(label)]) + " times, expected 2");
    }
  }
  return pd;
}

namespace {

struct Slot {
  int crossing;
  int position;
};

}  // namespace

KnotGroup wirtinger(const PDCode& pd) {
  KnotGroup out;
  const int c = static_cast<int>(pd.size());
  if (c == 0) {
    out.presentation.ngens = 1;
    out.meridian = {1};
    return out;
  }
  const int edges = 2 * c;
  std::vector<std::vector<Slot>> slots(static_cast<std::size_t>(edges) + 1);
  for (int x = 0; x < c; ++x) {
    for (int p = 0; p < 4; ++p) slots[static_cast<std::size_t>(pd.crossings[x][p])].push_back({x, p});
  }
  auto other_end = [&](int label, Slot here) {
    const auto& s = slots[static_cast<std::size_t>(label)];
    bool first_is_here = s[0].crossing == here.crossing && s[0].position == here.position;
    return first_is_here ? s[1] : s[0];
  };

  // Walk the diagram from the incoming under-strand of crossing 0.
  std::vector<int> sign(static_cast<std::size_t>(c), 0);
  std::vector<int> walk_edges;          // edges in traversal order
  std::vector<int> under_sequence;      // crossings passed under, in order
  Slot at{0, 0};
  std::vector<int> visits(static_cast<std::size_t>(c), 0);
  do {
    const auto& x = pd.crossings[static_cast<std::size_t>(at.crossing)];
    if (at.position == 2) {
      throw PdCodeError("crossing " + std::to_string(at.crossing + 1) +
                        " is entered along its outgoing under-strand; orientation is inconsistent");
    }
    if (at.position == 0) {
      under_sequence.push_back(at.crossing);
    } else {
      sign[static_cast<std::size_t>(at.crossing)] = at.position == 3 ? 1 : -1;
    }
    if (++visits[static_cast<std::size_t>(at.crossing)] > 2) throw PdCodeError("PD code walk does not close up");
    Slot exit{at.crossing, (at.position + 2) % 4};
    int edge = x[static_cast<std::size_t>(exit.position)];
    walk_edges.push_back(edge);
    at = other_end(edge, exit);
  } while (!(at.crossing == 0 && at.position == 0));
  if (static_cast<int>(walk_edges.size()) != edges) {
    throw MultiComponentError("PD code has more than one component");
  }

  // Over-arcs: edges joined across the over-strand of each crossing.
  std::vector<int> parent(static_cast<std::size_t>(edges) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[static_cast<std::size_t>(e)] != e) {
      parent[static_cast<std::size_t>(e)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(e)])];
      e = parent[static_cast<std::size_t>(e)];
    }
    return e;
  };
  for (const auto& x : pd.crossings) parent[static_cast<std::size_t>(find(x[1]))] = find(x[3]);
  std::vector<int> arc_of_root(static_cast<std::size_t>(edges) + 1, -1);
  int arcs = 0;
  for (int e : walk_edges) {
    int root = find(e);
    if (arc_of_root[static_cast<std::size_t>(root)] < 0) arc_of_root[static_cast<std::size_t>(root)] = arcs++;
  }
  auto arc = [&](int edge) { return arc_of_root[static_cast<std::size_t>(find(edge))] + 1; };

  out.presentation.ngens = arcs;
  for (int x = 0; x < c; ++x) {
    const auto& cr = pd.crossings[static_cast<std::size_t>(x)];
    int a = arc(cr[1]), b = arc(cr[0]), out_arc = arc(cr[2]);
    int e = sign[static_cast<std::size_t>(x)];
    out.presentation.relators.push_back(reduce({-e * a, b, e * a, -out_arc}));
    out.writhe += e;
  }
  // The walk starts on the outgoing under-edge of crossing 0, and the last
  // under-crossing met is crossing 0 itself.
  std::rotate(under_sequence.begin(), under_sequence.begin() + 1, under_sequence.end());
  out.meridian = {arc(walk_edges.front())};
  Word longitude;
  for (int x : under_sequence) {
    const auto& cr = pd.crossings[static_cast<std::size_t>(x)];
    longitude.push_back(sign[static_cast<std::size_t>(x)] * arc(cr[1]));
  }
  for (int i = 0; i < std::abs(out.writhe); ++i) {
    longitude.push_back(out.writhe > 0 ? -out.meridian[0] : out.meridian[0]);
  }
  out.longitude = reduce(longitude);
  out.presentation.validate();
  return out;
}

}  // namespace charslope
