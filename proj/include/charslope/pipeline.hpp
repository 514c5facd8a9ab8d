#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "charslope/census.hpp"
#include "charslope/pi1.hpp"
#include "charslope/rational.hpp"

namespace charslope {

inline constexpr int kReportSchemaVersion = 1;

/// One compared quantity. Decisive entries carry the values that separate the
/// target from the candidate; the rest record checked preconditions.
struct Evidence {
  std::string quantity;
  std::string target;
  std::string candidate;
  bool decisive = false;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

enum class Verdict { target, eliminated, surviving };
enum class Conclusion { characterized, distinguished, inconclusive };

std::string to_string(Verdict v);
std::string to_string(Conclusion c);

struct CandidateVerdict {
  /// A knot spec, or a description of an infinite family of specs.
  std::string spec;
  Verdict verdict = Verdict::surviving;
  std::string obstruction;  // empty unless eliminated
  std::vector<Evidence> evidence;

  friend bool operator==(const CandidateVerdict&, const CandidateVerdict&) = default;
};

/// A cited theorem the argument relies on, kept apart from computed evidence.
struct Axiom {
  std::string tag;
  std::string statement;
  std::string source;

  friend bool operator==(const Axiom&, const Axiom&) = default;
};

struct Report {
  std::string kind;  // characterize_zero or distinguish
  std::string target;
  Rational slope;
  std::vector<CandidateVerdict> candidates;
  Conclusion conclusion = Conclusion::inconclusive;
  std::vector<Axiom> axioms;
  std::vector<std::string> notes;

  std::string to_json(int indent = 2) const;
  static Report from_json(std::string_view text);
  std::string to_text() const;

  friend bool operator==(const Report&, const Report&) = default;
};

struct PipelineOptions {
  /// Pretzels P(-3,3,2n+1) listed one by one; the rest of the family is one entry.
  long pretzel_window = 5;
  /// Recount index-6 covers from the diagrams instead of trusting the fixtures.
  bool recompute_covers = false;
  LowIndexOptions low_index;
};

/// Replays the 0-surgery characterization argument for one knot of the
/// classified universe. Throws UnknownKnotError outside it.
Report characterize_zero(const Census& census, const KnotSpec& spec, const PipelineOptions& options = {});

/// Compares S^3_r(a) with S^3_r(b). Throws IdenticalSpecError when a and b are
/// the same knot.
Report distinguish(const Census& census, const KnotSpec& a, const KnotSpec& b, const Rational& slope,
                   const PipelineOptions& options = {});

}  // namespace charslope
