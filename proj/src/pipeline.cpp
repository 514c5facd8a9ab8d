#include "charslope/pipeline.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "charslope/floer.hpp"
#include "charslope/loopexp.hpp"
#include "charslope/seifert.hpp"

namespace charslope {

namespace {

using json = nlohmann::ordered_json;

const std::vector<Axiom>& axiom_registry() {
  static const std::vector<Axiom> axioms = {
      {"genus-detection", "S^3_0(K) determines the Seifert genus of K", "Gabai, Foliations and the topology of 3-manifolds III"},
      {"floer-surgery-inputs",
       "d(S^3_1(K)) = -2V_0(K); d_{1/2}(S^3_0(K)) = 1/2 - 2V_0(K) and d_{-1/2}(S^3_0(K)) = -1/2 + 2V_0(mK); for genus one K, "
       "HF+_red(S^3_1(K)) has trivial U-action and dimension dim HFK^(K,1) - V_0(K)",
       "Ni-Wu; Ozsvath-Szabo, absolutely graded Floer homologies; Baker-Sivek, characterizing slopes for 5_2"},
      {"nearly-fibered-classification",
       "a genus-one knot with dim HFK^(K,1) = 2 is, up to mirroring, one of 5_2, 15n43522, Wh-(T(2,3),2), "
       "Wh+(T(2,3),2) or P(-3,3,2n+1)",
       "Baker-Sivek, genus-one nearly fibered knots"},
      {"characterizing-5_2", "0 is a characterizing slope for 5_2 and for its mirror",
       "Baker-Sivek, characterizing slopes for 5_2"},
      {"casson-gordon", "for the surjection chi: H_1(S^3_0(K)) -> Z/2, sigma_1(S^3_0(K), chi) = -sigma(K)",
       "Casson-Gordon, cobordism of classical knots"},
      {"jsj-uniqueness",
       "JSJ tori are unique up to isotopy, so an orientation-preserving homeomorphism matches the pieces of the "
       "decompositions preserving orientation",
       "Jaco-Shalen; Johannson"},
      {"jsj-pretzel",
       "S^3_0(P(-3,3,2n+1)) has a single non-separating JSJ torus, and cutting along it leaves the complement of the "
       "(2,4)-torus link, Seifert fibered over the annulus",
       "Ichihara-Jong; Cantwell-Conlon"},
      {"jsj-whitehead",
       "S^3_0(Wh+(T(2,3),2)) has JSJ tori T and Sigma^, with pieces the exterior of T(2,3) and a manifold Seifert fibered "
       "over a pair of pants",
       "Gabai, surgery on knots in solid tori; Ichihara-Jong; Baker-Sivek, genus-one nearly fibered knots"},
      {"index-6-covers", "the number of conjugacy classes of index-6 subgroups of pi_1 is a homeomorphism invariant",
       "standard"},
      {"ohtsuki-lambda1",
       "lambda_1(M; 0) is an invariant of closed 3-manifolds with b_1 = 1; for M = S^3_0(K) it equals "
       "-1/2 Res_{t=0} (1 - t^-1)^2 P_1(t) / Delta(t)^3 with P_1 = -(t - 2 + t^-1) Theta^_K(t)",
       "Ohtsuki, perturbative invariants of 3-manifolds with the first Betti number 1; Ohtsuki, cabling formulae"},
      {"ohtsuki-pretzel-2-loop", "reduced 2-loop polynomial of the 3-strand pretzel knot P(p,q,r)",
       "Ohtsuki, on the 2-loop polynomial of knots"},
      {"ito-lmo",
       "if S^3_r(K) and S^3_r(J) are homeomorphic for some r != 0 and K, J have equal a_4 (under the further "
       "hypotheses of Ito's obstruction), then v_3(K) = v_3(J)",
       "Ito, LMO invariant obstruction to surgery characterization"},
  };
  return axioms;
}

struct Context {
  const Census& census;
  const PipelineOptions& options;
  std::set<std::string> used;
  std::vector<std::string> notes;
  std::map<KnotSpec, long> covers;

  void use(const std::string& tag) { used.insert(tag); }
  void note(const std::string& text) {
    if (std::find(notes.begin(), notes.end(), text) == notes.end()) notes.push_back(text);
  }
};

bool is_5_2(const KnotRecord& r) {
  return r.spec.family == KnotSpec::Family::named && r.spec.name == "5_2";
}

bool is_pretzel(const KnotRecord& r) { return r.spec.family == KnotSpec::Family::pretzel; }

Rational lambda1_of(const KnotRecord& r) {
  const auto& v = r.spec.pretzel;
  LaurentPoly p1 = p1_from_theta(pretzel_theta_hat(PretzelParams::make(v[0], v[1], v[2])));
  Rational a = lambda1_shortcut(r.delta, p1);
  Rational b = lambda1_residue(r.delta, p1);
  if (a != b) throw InternalError("lambda_1 routes disagree for " + r.spec.to_string());
  return a;
}

long cover_count(Context& ctx, const KnotRecord& r) {
  if (!r.cover6) throw InternalError("no cover count for " + r.spec.to_string());
  if (!ctx.options.recompute_covers) {
    ctx.note("index-6 cover counts are read from fixtures whose diagrams passed the Fox-calculus check");
    return *r.cover6;
  }
  KnotSpec base = r.spec;
  base.mirrored = false;
  if (auto it = ctx.covers.find(base); it != ctx.covers.end()) return it->second;
  KnotGroup g = wirtinger(checked_pd(r));
  auto pres = tietze_simplify(surgery_presentation(g.presentation, g.meridian, g.longitude, 0));
  LowIndexOptions opt = ctx.options.low_index;
  opt.max_index = std::max(opt.max_index, 6);
  long count = static_cast<long>(low_index(pres, opt).counts.at(6));
  if (count != *r.cover6) {
    throw InconsistencyError("index-6 cover count of S^3_0(" + r.spec.to_string() + ") is " + std::to_string(count) +
                             ", fixture says " + std::to_string(*r.cover6));
  }
  ctx.note("index-6 cover counts were recomputed from the diagrams by low-index subgroup search");
  ctx.covers[base] = count;
  return count;
}

void eliminate(CandidateVerdict& v, const std::string& obstruction, Evidence decisive) {
  decisive.decisive = true;
  v.verdict = Verdict::eliminated;
  v.obstruction = obstruction;
  v.evidence.push_back(std::move(decisive));
}

// Decides whether S^3_0(k) and S^3_0(j) can be homeomorphic.
CandidateVerdict judge(Context& ctx, const KnotRecord& k, const KnotRecord& j) {
  CandidateVerdict v;
  v.spec = j.spec.to_string();
  if (k.delta != j.delta) {
    eliminate(v, "alexander-polynomial", {"Alexander polynomial", k.delta.to_string(), j.delta.to_string()});
    return v;
  }
  v.evidence.push_back({"Alexander polynomial", k.delta.to_string(), j.delta.to_string(), false});
  ctx.use("genus-detection");
  ctx.use("floer-surgery-inputs");
  ForceVerdict forced = prop21_force_equality(k.dim_hfk_top, j.dim_hfk_top, true);
  if (forced != ForceVerdict::forced_equal) {
    eliminate(v, "knot-floer-dimension",
              {"dim HFK^(-,1)", std::to_string(k.dim_hfk_top), std::to_string(j.dim_hfk_top)});
    return v;
  }
  v.evidence.push_back({"dim HFK^(-,1) forced equal", std::to_string(k.dim_hfk_top), std::to_string(j.dim_hfk_top), false});

  const bool mirror_pair = ctx.census.canonical(k.spec.mirror()) == j.spec;
  if (is_pretzel(k) && is_pretzel(j)) {
    ctx.use("ohtsuki-lambda1");
    ctx.use("ohtsuki-pretzel-2-loop");
    ctx.note("lambda_1 of each pretzel is computed from its own parameters; a sign ambiguity in the normalization of "
             "P_1 would flip every value at once and leaves the comparison unchanged");
    eliminate(v, "lambda1", {"lambda_1(S^3_0; 0)", to_string(lambda1_of(k)), to_string(lambda1_of(j))});
    return v;
  }
  if (mirror_pair) {
    int sk = signature(k.seifert), sj = signature(j.seifert);
    if (sk != 0) {
      ctx.use("casson-gordon");
      UnitCircleRoots roots = unit_circle_roots(k.delta);
      if (!roots.empty()) {
        std::string root = "(" + to_string(roots.real()) + ", " + to_string(roots.imag_squared()) + ")";
        v.evidence.push_back({"unit-circle root of Delta (re, im^2)", root, root, false});
      }
      eliminate(v, "signature", {"sigma_1(S^3_0, chi) = -sigma", std::to_string(-sk), std::to_string(-sj)});
      return v;
    }
    v.evidence.push_back({"signature", std::to_string(sk), std::to_string(sj), false});
  }
  if (is_5_2(k) || is_5_2(j)) {
    ctx.use("characterizing-5_2");
    eliminate(v, "cited-characterization", {"knot", k.spec.to_string(), j.spec.to_string()});
    return v;
  }
  if (k.jsj.tabulated && j.jsj.tabulated && k.jsj != j.jsj) {
    ctx.use("jsj-uniqueness");
    if (is_pretzel(k) || is_pretzel(j)) ctx.use("jsj-pretzel");
    ctx.use("jsj-whitehead");
    eliminate(v, "jsj-decomposition", {"JSJ decomposition of S^3_0", k.jsj.to_string(), j.jsj.to_string()});
    return v;
  }
  if (k.cover6 && j.cover6) {
    long ck = cover_count(ctx, k), cj = cover_count(ctx, j);
    if (ck != cj) {
      ctx.use("index-6-covers");
      eliminate(v, "cover-count", {"index-6 subgroup classes of pi_1(S^3_0)", std::to_string(ck), std::to_string(cj)});
      return v;
    }
  }
  return v;
}

// lambda_1 of P(-3,3,x) as c * x. Theta^ is homogeneous of degree one in x
// for this family and lambda_1 is linear in Theta^.
Rational pretzel_lambda1_slope(const Census& census) {
  KnotRecord unit = census.lookup(KnotSpec::make_pretzel(-3, 3, 1));
  LaurentPoly theta1 = pretzel_theta_hat(PretzelParams::make(-3, 3, 1));
  for (long x : {-11L, 3L, 13L}) {
    if (pretzel_theta_hat(PretzelParams::make(-3, 3, x)) != Rational(x) * theta1) {
      throw InternalError("2-loop polynomial of P(-3,3,x) is not linear in x");
    }
  }
  return lambda1_of(unit);
}

std::string family_label(long window, std::optional<long> excluded_x) {
  std::string label = "P(-3,3,2m+1) for m < " + std::to_string(-window) + " or m > " + std::to_string(window);
  if (excluded_x) label += ", 2m+1 != " + std::to_string(*excluded_x);
  return label;
}

CandidateVerdict judge_family(Context& ctx, const KnotRecord& k, long window) {
  KnotRecord sample = ctx.census.lookup(KnotSpec::make_pretzel(-3, 3, 2 * window + 3));
  std::optional<long> excluded;
  if (is_pretzel(k) && (k.spec.pretzel[2] < -2 * window + 1 || k.spec.pretzel[2] > 2 * window + 1)) {
    excluded = k.spec.pretzel[2];
  }
  CandidateVerdict v;
  v.spec = family_label(window, excluded);
  if (k.delta != sample.delta) {
    eliminate(v, "alexander-polynomial", {"Alexander polynomial", k.delta.to_string(), sample.delta.to_string()});
    return v;
  }
  v.evidence.push_back({"Alexander polynomial", k.delta.to_string(), sample.delta.to_string(), false});
  ctx.use("genus-detection");
  ctx.use("floer-surgery-inputs");
  if (is_pretzel(k)) {
    ctx.use("ohtsuki-lambda1");
    ctx.use("ohtsuki-pretzel-2-loop");
    Rational c = pretzel_lambda1_slope(ctx.census);
    std::string symbolic = c == Rational(1, 16) ? "(2m+1)/16" : "(2m+1)*" + to_string(c);
    eliminate(v, "lambda1", {"lambda_1(S^3_0; 0)", to_string(lambda1_of(k)), symbolic});
    return v;
  }
  if (k.jsj.tabulated && k.jsj != sample.jsj) {
    ctx.use("jsj-uniqueness");
    ctx.use("jsj-pretzel");
    ctx.use("jsj-whitehead");
    eliminate(v, "jsj-decomposition", {"JSJ decomposition of S^3_0", k.jsj.to_string(), sample.jsj.to_string()});
    return v;
  }
  return v;
}

void check_consistency(const Report& r) {
  for (const auto& c : r.candidates) {
    if (c.verdict != Verdict::eliminated) continue;
    auto it = std::find_if(c.evidence.begin(), c.evidence.end(), [](const Evidence& e) { return e.decisive; });
    if (it == c.evidence.end()) throw InternalError("candidate " + c.spec + " eliminated without decisive evidence");
    if (it->target == it->candidate) {
      throw InternalError("candidate " + c.spec + " eliminated with equal values of " + it->quantity);
    }
  }
}

void finish(Report& r, Context& ctx) {
  for (const auto& a : axiom_registry()) {
    if (ctx.used.count(a.tag)) r.axioms.push_back(a);
  }
  r.notes = ctx.notes;
  check_consistency(r);
}

void alias_note(Context& ctx, const KnotRecord& rec) {
  for (const auto& a : rec.aliases) {
    ctx.note(a + " is recorded as another name for " + rec.spec.to_string() +
             (rec.identification.empty() ? "" : " (identification " + rec.identification + ")"));
  }
}

const std::map<std::string, Verdict>& verdict_names() {
  static const std::map<std::string, Verdict> m = {
      {"target", Verdict::target}, {"eliminated", Verdict::eliminated}, {"surviving", Verdict::surviving}};
  return m;
}

const std::map<std::string, Conclusion>& conclusion_names() {
  static const std::map<std::string, Conclusion> m = {{"characterized", Conclusion::characterized},
                                                       {"distinguished", Conclusion::distinguished},
                                                       {"inconclusive", Conclusion::inconclusive}};
  return m;
}

template <class E>
E from_name(const std::map<std::string, E>& names, const std::string& s) {
  auto it = names.find(s);
  if (it == names.end()) throw ParseError("unknown report value '" + s + "'", 0);
  return it->second;
}

}  // namespace

std::string to_string(Verdict v) {
  for (const auto& [name, value] : verdict_names()) {
    if (value == v) return name;
  }
  return "unknown";
}

std::string to_string(Conclusion c) {
  for (const auto& [name, value] : conclusion_names()) {
    if (value == c) return name;
  }
  return "unknown";
}

Report characterize_zero(const Census& census, const KnotSpec& spec, const PipelineOptions& options) {
  if (options.pretzel_window < 0) throw UsageError("pretzel window must be nonnegative");
  Context ctx{census, options, {}, {}, {}};
  KnotRecord target = census.lookup(spec);
  alias_note(ctx, target);
  ctx.use("nearly-fibered-classification");

  Report r;
  r.kind = "characterize_zero";
  r.target = target.spec.to_string();
  r.slope = 0;

  std::vector<KnotSpec> universe = census.universe(-options.pretzel_window, options.pretzel_window);
  if (is_pretzel(target) && std::find(universe.begin(), universe.end(), target.spec) == universe.end()) {
    universe.push_back(target.spec);
  }
  for (const KnotSpec& s : universe) {
    KnotRecord j = census.lookup(s);
    if (j.spec == target.spec) {
      r.candidates.push_back({r.target, Verdict::target, "", {}});
      continue;
    }
    r.candidates.push_back(judge(ctx, target, j));
  }
  r.candidates.push_back(judge_family(ctx, target, options.pretzel_window));

  bool all_out = std::all_of(r.candidates.begin(), r.candidates.end(),
                             [](const CandidateVerdict& c) { return c.verdict != Verdict::surviving; });
  r.conclusion = all_out ? Conclusion::characterized : Conclusion::inconclusive;
  finish(r, ctx);
  return r;
}

Report distinguish(const Census& census, const KnotSpec& a, const KnotSpec& b, const Rational& slope,
                   const PipelineOptions& options) {
  Context ctx{census, options, {}, {}, {}};
  KnotRecord ka = census.lookup(a);
  KnotRecord kb = census.lookup(b);
  if (ka.spec == kb.spec) {
    throw IdenticalSpecError(a.to_string() + " and " + b.to_string() + " are the same knot");
  }
  alias_note(ctx, ka);
  alias_note(ctx, kb);

  Report r;
  r.kind = "distinguish";
  r.target = ka.spec.to_string();
  r.slope = slope;
  if (slope == 0) {
    ctx.use("nearly-fibered-classification");
    r.candidates.push_back(judge(ctx, ka, kb));
  } else if (is_pretzel(ka) && is_pretzel(kb)) {
    CandidateVerdict v;
    v.spec = kb.spec.to_string();
    Integer a4a = conway(ka.seifert).a4(), a4b = conway(kb.seifert).a4();
    v.evidence.push_back({"a_4", to_string(a4a), to_string(a4b), false});
    if (a4a == a4b) {
      ctx.use("ito-lmo");
      ctx.use("ohtsuki-pretzel-2-loop");
      const auto& pa = ka.spec.pretzel;
      const auto& pb = kb.spec.pretzel;
      Rational va = v3_from_theta(pretzel_theta_hat(PretzelParams::make(pa[0], pa[1], pa[2])));
      Rational vb = v3_from_theta(pretzel_theta_hat(PretzelParams::make(pb[0], pb[1], pb[2])));
      if (va != vb) eliminate(v, "finite-type-v3", {"v_3", to_string(va), to_string(vb)});
    }
    r.candidates.push_back(std::move(v));
  } else {
    r.candidates.push_back({kb.spec.to_string(), Verdict::surviving, "", {}});
    ctx.note("no implemented obstruction applies to slope " + to_string(slope) + " for this pair");
  }
  r.conclusion = r.candidates.back().verdict == Verdict::eliminated ? Conclusion::distinguished
                                                                     : Conclusion::inconclusive;
  finish(r, ctx);
  return r;
}

std::string Report::to_json(int indent) const {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = kind;
  j["target"] = target;
  j["slope"] = charslope::to_string(slope);
  json cands = json::array();
  for (const auto& c : candidates) {
    json e = json::array();
    for (const auto& ev : c.evidence) {
      e.push_back({{"quantity", ev.quantity}, {"target", ev.target}, {"candidate", ev.candidate}, {"decisive", ev.decisive}});
    }
    json obstruction = c.obstruction.empty() ? json(nullptr) : json(c.obstruction);
    cands.push_back({{"spec", c.spec}, {"verdict", charslope::to_string(c.verdict)}, {"obstruction", obstruction},
                     {"evidence", e}});
  }
  j["candidates"] = cands;
  j["conclusion"] = charslope::to_string(conclusion);
  json ax = json::array();
  for (const auto& a : axioms) ax.push_back({{"tag", a.tag}, {"statement", a.statement}, {"source", a.source}});
  j["axioms"] = ax;
  j["notes"] = notes;
  return j.dump(indent);
}

Report Report::from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what(), e.byte);
  }
  try {
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw UsageError("unsupported report schema version " + j.at("schema_version").dump());
    }
    Report r;
    r.kind = j.at("kind").get<std::string>();
    r.target = j.at("target").get<std::string>();
    r.slope = parse_rational(j.at("slope").get<std::string>());
    for (const auto& c : j.at("candidates")) {
      CandidateVerdict v;
      v.spec = c.at("spec").get<std::string>();
      v.verdict = from_name(verdict_names(), c.at("verdict").get<std::string>());
      if (!c.at("obstruction").is_null()) v.obstruction = c.at("obstruction").get<std::string>();
      for (const auto& e : c.at("evidence")) {
        v.evidence.push_back({e.at("quantity").get<std::string>(), e.at("target").get<std::string>(),
                              e.at("candidate").get<std::string>(), e.at("decisive").get<bool>()});
      }
      r.candidates.push_back(std::move(v));
    }
    r.conclusion = from_name(conclusion_names(), j.at("conclusion").get<std::string>());
    for (const auto& a : j.at("axioms")) {
      r.axioms.push_back({a.at("tag").get<std::string>(), a.at("statement").get<std::string>(),
                          a.at("source").get<std::string>()});
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  }
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << kind << ": " << target << " at slope " << charslope::to_string(slope) << '\n';
  for (const auto& c : candidates) {
    os << "  " << c.spec << ": " << charslope::to_string(c.verdict);
    if (!c.obstruction.empty()) os << " by " << c.obstruction;
    os << '\n';
    for (const auto& e : c.evidence) {
      os << "    " << (e.decisive ? "* " : "  ") << e.quantity << ": " << e.target << " vs " << e.candidate << '\n';
    }
  }
  os << "conclusion: " << charslope::to_string(conclusion) << '\n';
  if (!axioms.empty()) {
    os << "axioms:\n";
    for (const auto& a : axioms) os << "  [" << a.tag << "] " << a.statement << " (" << a.source << ")\n";
  }
  if (!notes.empty()) {
    os << "notes:\n";
    for (const auto& n : notes) os << "  " << n << '\n';
  }
  return os.str();
}

}  // namespace charslope
