#pragma once

#include <array>
#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charslope/laurent.hpp"
#include "charslope/pi1.hpp"
#include "charslope/seifert.hpp"

namespace charslope {

struct KnotSpec {
  enum class Family { pretzel, whitehead_double, named };

  Family family = Family::named;
  std::array<long, 3> pretzel{};  // P(p,q,r)
  int clasp = 0;                  // +1 or -1
  std::array<long, 2> companion{};  // torus knot T(a,b)
  long twists = 0;
  std::string name;
  bool mirrored = false;

  static KnotSpec make_pretzel(long p, long q, long r, bool mirrored = false);
  static KnotSpec make_whitehead(int clasp, long a, long b, long twists, bool mirrored = false);
  static KnotSpec make_named(std::string name, bool mirrored = false);

  /// Text form accepted by parse_knot_spec, e.g. "m(Wh+(T(2,3),2))".
  std::string to_string() const;
  KnotSpec mirror() const;

  friend bool operator==(const KnotSpec&, const KnotSpec&) = default;
  friend auto operator<=>(const KnotSpec&, const KnotSpec&) = default;
};

/// Grammar: P(p,q,r) | Wh+(T(a,b),t) | Wh-(T(a,b),t) | <digits>_<digits> |
/// <digits>n<digits> | m(<spec>). Whitespace is ignored between tokens.
/// Throws ParseError with a position, or ParityError for even pretzel parameters.
KnotSpec parse_knot_spec(std::string_view text);

struct JSJPiece {
  enum class Kind { seifert_fibered, knot_exterior };

  Kind kind = Kind::knot_exterior;
  std::string base;  // annulus or pair-of-pants; empty for knot exteriors
  std::string tag;   // companion-link tag or knot name

  std::string to_string() const;
  friend bool operator==(const JSJPiece&, const JSJPiece&) = default;
};

struct JSJDescriptor {
  bool tabulated = false;
  int tori = 0;
  int nonseparating = 0;
  std::vector<JSJPiece> pieces;

  /// Descriptor of the mirror image; chiral tags pick up an m(...) wrapper
  /// and torus-knot exteriors flip to T(-a,b).
  JSJDescriptor mirror() const;
  std::string to_string() const;
  friend bool operator==(const JSJDescriptor&, const JSJDescriptor&) = default;
};

struct KnotRecord {
  KnotSpec spec;
  std::vector<std::string> aliases;
  std::string identification;  // provenance note for aliases, may be empty
  SeifertMatrix seifert;
  LaurentPoly delta;
  int dim_hfk_top = 2;
  int genus = 1;
  JSJDescriptor jsj;
  std::optional<long> cover6;
  std::optional<PDCode> pd;
};

/// The record's diagram after checking its Fox-calculus Alexander polynomial
/// against the record's delta. Throws DomainError when there is no diagram and
/// FixtureError on a mismatch.
PDCode checked_pd(const KnotRecord& record);

/// The fixture directory: $CHARSLOPE_FIXTURE_DIR if set, else the build-time default.
std::filesystem::path default_fixture_dir();

/// Largest |r| for which lookup attaches a generated pretzel diagram.
inline constexpr long kMaxPretzelDiagramTwist = 41;

class Census {
 public:
  /// Reads and validates every *.knot record. Throws FixtureError on any
  /// malformed or inconsistent record.
  static Census load(const std::filesystem::path& dir);
  /// Loaded once from default_fixture_dir().
  static const Census& standard();

  /// Resolves aliases and normalizes pretzels: parameters are reordered to
  /// (-3,3,x) when possible and mirrors are absorbed by negating parameters.
  KnotSpec canonical(const KnotSpec& spec) const;
  /// Throws UnknownKnotError outside the classified universe.
  KnotRecord lookup(const KnotSpec& spec) const;
  KnotRecord lookup(std::string_view text) const { return lookup(parse_knot_spec(text)); }
  bool contains(const KnotSpec& spec) const;

  /// Every tabulated knot in both mirror states, then P(-3,3,2n+1) for n in [n_lo, n_hi].
  std::vector<KnotSpec> universe(long n_lo = -5, long n_hi = 5) const;

 private:
  std::map<KnotSpec, KnotRecord> records_;  // unmirrored canonical specs
  std::map<KnotSpec, KnotSpec> aliases_;
  KnotRecord pretzel_family_;
};

}  // namespace charslope
