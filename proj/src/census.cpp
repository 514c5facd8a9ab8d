#include "charslope/census.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#ifndef CHARSLOPE_FIXTURE_DIR
#define CHARSLOPE_FIXTURE_DIR "fixtures/knots"
#endif

namespace charslope {

KnotSpec KnotSpec::make_pretzel(long p, long q, long r, bool mirrored) {
  if (p % 2 == 0 || q % 2 == 0 || r % 2 == 0) throw ParityError("pretzel parameters must all be odd");
  KnotSpec s;
  s.family = Family::pretzel;
  s.pretzel = {p, q, r};
  s.mirrored = mirrored;
  return s;
}

KnotSpec KnotSpec::make_whitehead(int clasp, long a, long b, long twists, bool mirrored) {
  if (clasp != 1 && clasp != -1) throw UsageError("clasp sign must be + or -");
  KnotSpec s;
  s.family = Family::whitehead_double;
  s.clasp = clasp;
  s.companion = {a, b};
  s.twists = twists;
  s.mirrored = mirrored;
  return s;
}

KnotSpec KnotSpec::make_named(std::string name, bool mirrored) {
  KnotSpec s;
  s.family = Family::named;
  s.name = std::move(name);
  s.mirrored = mirrored;
  return s;
}

std::string KnotSpec::to_string() const {
  std::ostringstream os;
  switch (family) {
    case Family::pretzel:
      os << "P(" << pretzel[0] << ',' << pretzel[1] << ',' << pretzel[2] << ')';
      break;
    case Family::whitehead_double:
      os << "Wh" << (clasp > 0 ? '+' : '-') << "(T(" << companion[0] << ',' << companion[1] << ")," << twists << ')';
      break;
    case Family::named:
      os << name;
      break;
  }
  return mirrored ? "m(" + os.str() + ")" : os.str();
}

KnotSpec KnotSpec::mirror() const {
  KnotSpec s = *this;
  s.mirrored = !s.mirrored;
  return s;
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  KnotSpec parse() {
    KnotSpec s = spec();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + "; expected P(p,q,r), Wh+(T(2,3),t), Wh-(T(2,3),t), 5_2, 15n43522, 16n696530 or m(...)",
                     pos_);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip();
    }
    std::size_t digits = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      int d = text_[pos_] - '0';
      if (value > (std::numeric_limits<long>::max() - d) / 10) {
        pos_ = start;
        fail("integer out of range");
      }
      value = value * 10 + d;
      ++pos_;
    }
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    return negative ? -value : value;
  }

  KnotSpec spec() {
    skip();
    if (pos_ >= text_.size()) fail("empty knot name");
    char c = text_[pos_];
    if (c == 'm') {
      ++pos_;
      expect('(');
      KnotSpec inner = spec();
      expect(')');
      return inner.mirror();
    }
    if (c == 'P') {
      ++pos_;
      expect('(');
      std::size_t at = pos_;
      long p = integer();
      expect(',');
      long q = integer();
      expect(',');
      long r = integer();
      expect(')');
      for (long v : {p, q, r}) {
        if (v % 2 == 0) {
          throw ParityError("pretzel parameter " + std::to_string(v) + " is even (at position " +
                            std::to_string(at) + "); genus-one pretzels need odd p, q, r");
        }
      }
      return KnotSpec::make_pretzel(p, q, r);
    }
    if (c == 'W') {
      if (text_.substr(pos_, 2) != "Wh") fail("expected 'Wh'");
      pos_ += 2;
      skip();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) fail("expected clasp sign + or -");
      int clasp = text_[pos_] == '+' ? 1 : -1;
      ++pos_;
      expect('(');
      expect('T');
      expect('(');
      long a = integer();
      expect(',');
      long b = integer();
      expect(')');
      expect(',');
      long t = integer();
      expect(')');
      return KnotSpec::make_whitehead(clasp, a, b, t);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ >= text_.size() || (text_[pos_] != '_' && text_[pos_] != 'n' && text_[pos_] != 'a')) {
        fail("expected '_', 'a' or 'n' in a table name");
      }
      ++pos_;
      std::size_t idx = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == idx) fail("expected a table index");
      return KnotSpec::make_named(std::string(text_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string mirror_torus_tag(const std::string& tag) {
  // T(a,b) -> T(-a,b)
  if (tag.size() > 3 && tag.rfind("T(", 0) == 0) {
    std::string rest = tag.substr(2);
    return rest[0] == '-' ? "T(" + rest.substr(1) : "T(-" + rest;
  }
  return "m(" + tag + ")";
}

const LaurentPoly& delta_det7() {
  static const LaurentPoly d = LaurentPoly::parse("2*t - 3 + 2*t^-1");
  return d;
}

const LaurentPoly& delta_det9() {
  static const LaurentPoly d = LaurentPoly::parse("-2*t + 5 - 2*t^-1");
  return d;
}

struct RawRecord {
  std::filesystem::path file;
  std::multimap<std::string, std::string> fields;

  [[noreturn]] void fail(const std::string& what) const {
    throw FixtureError(file.filename().string() + ": " + what);
  }
  bool has(const std::string& key) const { return fields.count(key) > 0; }
  std::string get(const std::string& key) const {
    auto n = fields.count(key);
    if (n == 0) fail("missing field '" + key + "'");
    if (n > 1) fail("field '" + key + "' given more than once");
    return fields.find(key)->second;
  }
  std::vector<std::string> all(const std::string& key) const {
    std::vector<std::string> out;
    auto [b, e] = fields.equal_range(key);
    for (auto it = b; it != e; ++it) out.push_back(it->second);
    return out;
  }
  long get_long(const std::string& key) const {
    std::string v = get(key);
    std::size_t used = 0;
    long x = 0;
    try {
      x = std::stol(v, &used);
    } catch (const std::exception&) {
      fail("field '" + key + "' is not an integer");
    }
    if (used != v.size()) fail("field '" + key + "' is not an integer");
    return x;
  }
};

RawRecord read_record(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw FixtureError("cannot read " + file.string());
  RawRecord raw{file, {}};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) raw.fail("line " + std::to_string(lineno) + " has no ':'");
    raw.fields.emplace(trim(line.substr(0, colon)), trim(line.substr(colon + 1)));
  }
  return raw;
}

SeifertMatrix parse_matrix(const RawRecord& raw) {
  std::vector<std::vector<SeifertMatrix::Entry>> rows;
  std::stringstream all(raw.get("seifert"));
  std::string row;
  while (std::getline(all, row, ';')) {
    std::istringstream rs(row);
    std::vector<SeifertMatrix::Entry> r;
    std::string tok;
    while (rs >> tok) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoll(tok, &used));
        if (used != tok.size()) raw.fail("bad matrix entry '" + tok + "'");
      } catch (const std::logic_error&) {
        raw.fail("bad matrix entry '" + tok + "'");
      }
    }
    rows.push_back(std::move(r));
  }
  try {
    return SeifertMatrix(rows);
  } catch (const Error& e) {
    raw.fail(e.what());
  }
}

JSJDescriptor parse_jsj(const RawRecord& raw) {
  JSJDescriptor jsj;
  std::string head = raw.get("jsj");
  if (head == "untabulated") {
    if (raw.has("jsj.piece")) raw.fail("untabulated JSJ data cannot list pieces");
    return jsj;
  }
  std::istringstream hs(head);
  std::string w1, w2;
  if (!(hs >> w1 >> jsj.tori >> w2 >> jsj.nonseparating) || w1 != "tori" || w2 != "nonseparating") {
    raw.fail("jsj must be 'untabulated' or 'tori N nonseparating M'");
  }
  jsj.tabulated = true;
  for (const auto& text : raw.all("jsj.piece")) {
    std::istringstream ps(text);
    std::string kind;
    ps >> kind;
    JSJPiece piece;
    if (kind == "knot-exterior") {
      piece.kind = JSJPiece::Kind::knot_exterior;
    } else if (kind == "seifert-fibered") {
      piece.kind = JSJPiece::Kind::seifert_fibered;
      ps >> piece.base;
      if (piece.base != "annulus" && piece.base != "pair-of-pants") raw.fail("unknown base orbifold '" + piece.base + "'");
    } else {
      raw.fail("unknown JSJ piece kind '" + kind + "'");
    }
    std::getline(ps, piece.tag);
    piece.tag = trim(piece.tag);
    if (piece.tag.empty()) raw.fail("JSJ piece without a tag");
    jsj.pieces.push_back(std::move(piece));
  }
  if (jsj.pieces.empty() || jsj.tori < 1 || jsj.nonseparating > jsj.tori) raw.fail("inconsistent JSJ data");
  return jsj;
}

void check_common(const RawRecord& raw, KnotRecord& rec) {
  rec.delta = LaurentPoly::parse(raw.get("delta"));
  if (rec.delta != delta_det7() && rec.delta != delta_det9()) raw.fail("delta is not one of the two genus-one classes");
  rec.genus = static_cast<int>(raw.get_long("genus"));
  rec.dim_hfk_top = static_cast<int>(raw.get_long("dim_hfk_top"));
  if (rec.genus != 1) raw.fail("genus must be 1");
  if (rec.dim_hfk_top != 2) raw.fail("dim_hfk_top must be 2");
  rec.jsj = parse_jsj(raw);
}

KnotRecord mirror_record(const KnotRecord& r) {
  KnotRecord m = r;
  m.spec = r.spec.mirror();
  for (auto& a : m.aliases) a = "m(" + a + ")";
  m.seifert = r.seifert.mirror();
  m.jsj = r.jsj.mirror();
  if (r.pd) m.pd = mirror_pd(*r.pd);
  return m;
}

}  // namespace

KnotSpec parse_knot_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string JSJPiece::to_string() const {
  if (kind == Kind::knot_exterior) return "knot-exterior(" + tag + ")";
  return "seifert-fibered(" + base + "; " + tag + ")";
}

JSJDescriptor JSJDescriptor::mirror() const {
  JSJDescriptor m = *this;
  for (auto& p : m.pieces) {
    p.tag = p.kind == JSJPiece::Kind::knot_exterior ? mirror_torus_tag(p.tag) : "m(" + p.tag + ")";
    if (p.tag.rfind("m(m(", 0) == 0) p.tag = p.tag.substr(4, p.tag.size() - 6);
  }
  return m;
}

std::string JSJDescriptor::to_string() const {
  if (!tabulated) return "untabulated";
  std::ostringstream os;
  os << tori << (tori == 1 ? " torus" : " tori") << " (" << nonseparating << " non-separating):";
  for (std::size_t i = 0; i < pieces.size(); ++i) os << (i ? ", " : " ") << pieces[i].to_string();
  return os.str();
}

PDCode checked_pd(const KnotRecord& record) {
  if (!record.pd) throw DomainError("no diagram is available for " + record.spec.to_string());
  LaurentPoly fox = fox_alexander(wirtinger(*record.pd).presentation);
  if (fox != record.delta) {
    throw FixtureError("diagram of " + record.spec.to_string() + " has Alexander polynomial " + fox.to_string() +
                       ", expected " + record.delta.to_string());
  }
  return *record.pd;
}

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("CHARSLOPE_FIXTURE_DIR"); env && *env) return env;
  return CHARSLOPE_FIXTURE_DIR;
}

Census Census::load(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw FixtureError("fixture directory " + dir.string() + " does not exist");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".knot") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  Census census;
  bool have_family = false;
  for (const auto& file : files) {
    RawRecord raw = read_record(file);
    KnotRecord rec;
    try {
      if (raw.has("family")) {
        if (raw.get("family") != "pretzel") raw.fail("unknown family '" + raw.get("family") + "'");
        check_common(raw, rec);
        const auto& j = rec.jsj;
        if (!j.tabulated || j.tori != 1 || j.nonseparating != 1 || j.pieces.size() != 1 ||
            j.pieces[0].kind != JSJPiece::Kind::seifert_fibered || j.pieces[0].base != "annulus" ||
            j.pieces[0].tag != "T(2,4) complement") {
          raw.fail("pretzel family needs one non-separating torus cutting to a T(2,4) complement");
        }
        census.pretzel_family_ = std::move(rec);
        have_family = true;
        continue;
      }
      rec.spec = parse_knot_spec(raw.get("name"));
      if (rec.spec.mirrored || rec.spec.family == KnotSpec::Family::pretzel) raw.fail("records must name unmirrored non-pretzel knots");
      rec.seifert = parse_matrix(raw);
      check_common(raw, rec);
      if (alexander(rec.seifert) != rec.delta) {
        raw.fail("alexander(seifert) = " + alexander(rec.seifert).to_string() + " differs from delta");
      }
      if (rec.seifert.genus() != rec.genus) raw.fail("Seifert matrix size does not match the genus");
      for (const auto& a : raw.all("alias")) {
        KnotSpec alias = parse_knot_spec(a);
        rec.aliases.push_back(alias.to_string());
        census.aliases_[alias] = rec.spec;
      }
      if (raw.has("identification")) rec.identification = raw.get("identification");
      if (raw.has("cover6")) {
        long c = raw.get_long("cover6");
        if (c < 0) raw.fail("cover6 must be nonnegative");
        rec.cover6 = c;
      }
      if (raw.has("pd")) {
        rec.pd = parse_pd(raw.get("pd"));
        checked_pd(rec);
      }
      if (rec.spec.to_string() == "Wh+(T(2,3),2)") {
        const auto& j = rec.jsj;
        if (!j.tabulated || j.pieces.size() != 2 || j.pieces[0].kind != JSJPiece::Kind::knot_exterior ||
            j.pieces[1].kind != JSJPiece::Kind::seifert_fibered || j.pieces[1].base != "pair-of-pants") {
          raw.fail("Wh+ needs a knot exterior and a piece fibered over a pair of pants");
        }
      }
    } catch (const FixtureError&) {
      throw;
    } catch (const Error& e) {
      raw.fail(e.what());
    }
    if (!census.records_.emplace(rec.spec, rec).second) raw.fail("duplicate record for " + rec.spec.to_string());
  }
  if (!have_family) throw FixtureError("no pretzel family record in " + dir.string());
  for (const char* required : {"5_2", "15n43522", "Wh-(T(2,3),2)", "Wh+(T(2,3),2)"}) {
    if (!census.records_.count(parse_knot_spec(required))) {
      throw FixtureError(std::string("missing fixture record for ") + required);
    }
  }
  for (const auto& [alias, target] : census.aliases_) {
    if (census.records_.count(alias)) throw FixtureError("alias " + alias.to_string() + " shadows a record");
  }
  return census;
}

const Census& Census::standard() {
  static const Census census = load(default_fixture_dir());
  return census;
}

KnotSpec Census::canonical(const KnotSpec& spec) const {
  if (spec.family == KnotSpec::Family::pretzel) {
    std::array<long, 3> v = spec.pretzel;
    if (spec.mirrored) {
      for (auto& x : v) x = -x;
    }
    // Three-strand pretzels are unchanged by any permutation of the strands.
    std::sort(v.begin(), v.end());
    auto lo = std::find(v.begin(), v.end(), -3);
    auto hi = std::find(v.begin(), v.end(), 3);
    if (lo != v.end() && hi != v.end()) {
      long rest = 0;
      int used_lo = 0, used_hi = 0;
      for (long x : v) {
        if (x == -3 && !used_lo++) continue;
        if (x == 3 && !used_hi++) continue;
        rest = x;
      }
      v = {-3, 3, rest};
    }
    return KnotSpec::make_pretzel(v[0], v[1], v[2]);
  }
  KnotSpec base = spec;
  base.mirrored = false;
  if (auto it = aliases_.find(base); it != aliases_.end()) {
    KnotSpec out = it->second;
    out.mirrored = spec.mirrored;
    return out;
  }
  return spec;
}

bool Census::contains(const KnotSpec& spec) const {
  KnotSpec c = canonical(spec);
  if (c.family == KnotSpec::Family::pretzel) return c.pretzel[0] == -3 && c.pretzel[1] == 3;
  c.mirrored = false;
  return records_.count(c) > 0;
}

KnotRecord Census::lookup(const KnotSpec& spec) const {
  KnotSpec c = canonical(spec);
  if (!contains(c)) throw UnknownKnotError(spec.to_string() + " is not in the classified universe");
  if (c.family == KnotSpec::Family::pretzel) {
    KnotRecord rec = pretzel_family_;
    rec.spec = c;
    rec.seifert = pretzel_seifert(c.pretzel[0], c.pretzel[1], c.pretzel[2]);
    if (alexander(rec.seifert) != rec.delta) {
      throw InconsistencyError("alexander(pretzel_seifert) differs from the family delta for " + c.to_string());
    }
    if (std::labs(c.pretzel[2]) <= kMaxPretzelDiagramTwist) rec.pd = pretzel_pd(c.pretzel[0], c.pretzel[1], c.pretzel[2]);
    return rec;
  }
  KnotSpec base = c;
  base.mirrored = false;
  const KnotRecord& rec = records_.at(base);
  return c.mirrored ? mirror_record(rec) : rec;
}

std::vector<KnotSpec> Census::universe(long n_lo, long n_hi) const {
  std::vector<KnotSpec> out;
  for (const auto& [spec, rec] : records_) {
    out.push_back(spec);
    out.push_back(spec.mirror());
  }
  for (long n = n_lo; n <= n_hi; ++n) out.push_back(KnotSpec::make_pretzel(-3, 3, 2 * n + 1));
  return out;
}

}  // namespace charslope
