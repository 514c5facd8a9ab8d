#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "charslope/errors.hpp"
#include "charslope/laurent.hpp"

namespace charslope {

/// Planar diagram code. Each crossing lists four edge labels starting with the
/// incoming under-strand and proceeding counterclockwise. Labels run 1..2c
/// and each occurs exactly twice.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  std::size_t size() const { return crossings.size(); }
  std::string to_string() const;
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Accepts "X(1,4,2,5) X(3,6,4,1)", "X[1,4,2,5], ..." or "[(1,4,2,5), ...]".
/// Throws PdCodeError on arity, label-range, or double-occurrence problems.
PDCode parse_pd(std::string_view text);

/// A word in the generators: letter +k is generator k-1, -k its inverse.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);
Word inverse(const Word& w);
/// Free reduction.
Word reduce(const Word& w);

struct GroupPresentation {
  int ngens = 0;
  std::vector<Word> relators;

  /// Throws DomainError if a relator mentions an out-of-range generator.
  void validate() const;
  std::size_t total_length() const;
  std::string to_string() const;
};

/// Invariant factors of the abelianization: free rank plus torsion
/// coefficients (each > 1, dividing the next).
struct Abelianization {
  int free_rank = 0;
  std::vector<Integer> torsion;

  bool is_infinite_cyclic() const { return free_rank == 1 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

Abelianization abelianization(const GroupPresentation& pres);

struct KnotGroup {
  GroupPresentation presentation;
  Word meridian;
  Word longitude;
  int writhe = 0;
};

/// Wirtinger presentation with one generator per over-arc and one relator per
/// crossing. Convention: at a crossing of sign e with over-arc a, the under
/// strand passing from arc b to arc c satisfies c = a^-e b a^e. The longitude
/// is the ordered product of a^e over the under-crossings met walking from the
/// meridian's arc, times meridian^-writhe.
/// Throws MultiComponentError for links.
KnotGroup wirtinger(const PDCode& pd);

/// Adds the relator meridian^slope * longitude.
GroupPresentation surgery_presentation(const GroupPresentation& pres, const Word& meridian,
                                       const Word& longitude, long slope);

/// Crossing change at every crossing of an oriented diagram.
PDCode mirror_pd(const PDCode& pd);

/// Builds a diagram from bottom to top out of cups, caps and crossings of
/// adjacent strands. Strand positions are counted from the left.
class DiagramBuilder {
 public:
  enum class Kind {
    positive,  // the strand from bottom-left to top-right passes over
    negative,  // the strand from bottom-right to top-left passes over
  };

  void cup(std::size_t i);
  void cap(std::size_t i);
  void cross(std::size_t i, Kind kind);
  /// Throws PdCodeError if strands are left open, MultiComponentError for links.
  PDCode finish() const;

 private:
  int fresh();
  int find(int e) const;

  std::vector<int> level_;
  std::vector<int> parent_;
  std::vector<std::array<int, 4>> crossings_;
};

/// Standard diagram of the pretzel knot P(p,q,r), all parameters odd.
/// Positive parameters give positive-kind crossings, matching pretzel_seifert.
PDCode pretzel_pd(long p, long q, long r);

/// Tietze simplification: cyclic reduction, duplicate removal, and
/// elimination of generators that occur once in some relator.
/// Deterministic for a given input.
GroupPresentation tietze_simplify(const GroupPresentation& pres);

/// Fox-calculus Alexander polynomial of a Wirtinger presentation, normalized
/// to be symmetric with value 1 at t = 1.
LaurentPoly fox_alexander(const GroupPresentation& wirtinger_pres);

/// Complete transitive coset table: table[c][2*g] is c * g, table[c][2*g+1] is c * g^-1.
struct CosetTable {
  int ngens = 0;
  std::vector<std::vector<int>> table;

  int index() const { return static_cast<int>(table.size()); }
  /// Checks that the action is a well-defined transitive permutation
  /// representation satisfying every relator at every coset.
  bool verify(const GroupPresentation& pres) const;
  /// Image of coset c under a word.
  int act(int c, const Word& w) const;
};

struct LowIndexOptions {
  int max_index = 6;
  std::uint64_t node_budget = 100'000'000;
  unsigned workers = 1;
  /// When set, every complete table found is re-verified and stored.
  bool collect_tables = false;
};

struct LowIndexResult {
  /// index -> number of conjugacy classes of subgroups of that index.
  std::map<int, std::uint64_t> counts;
  std::uint64_t nodes = 0;
  std::vector<CosetTable> tables;
};

class BudgetExceededError : public DomainError {
 public:
  BudgetExceededError(const std::string& what, LowIndexResult partial)
      : DomainError(what), partial_(std::move(partial)) {}
  const LowIndexResult& partial() const { return partial_; }

 private:
  LowIndexResult partial_;
};

inline constexpr int kMaxLowIndex = 7;

/// Counts conjugacy classes of subgroups of index 1..max_index by backtracking
/// over standardized partial coset tables with first-in-class pruning.
/// Throws BudgetExceededError (with partial counts) when the node budget runs out.
LowIndexResult low_index(const GroupPresentation& pres, const LowIndexOptions& options);

}  // namespace charslope
