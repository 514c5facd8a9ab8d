#include "charslope/cli.hpp"

#include <memory>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "charslope/census.hpp"
#include "charslope/loopexp.hpp"
#include "charslope/pipeline.hpp"

namespace charslope::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kKnotGrammar =
    "knot names: P(p,q,r) with p,q,r odd | Wh+(T(2,3),t) | Wh-(T(2,3),t) | 5_2 | 15n43522 | 16n696530 | m(<knot>)";

struct Config {
  bool json = false;
  std::string fixtures;
  std::string knot;
  std::string other;
  std::string slope = "0";
  int index = 6;
  std::uint64_t budget = LowIndexOptions{}.node_budget;
  unsigned workers = 1;
  bool recompute_covers = false;
};

class Runner {
 public:
  Runner(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void invariants() {
    KnotRecord r = census().lookup(cfg_.knot);
    json j;
    j["knot"] = r.spec.to_string();
    j["seifert_matrix"] = r.seifert.to_string();
    j["alexander"] = alexander(r.seifert).to_string();
    j["conway"] = conway(r.seifert).to_string();
    j["determinant"] = to_string(determinant(r.seifert));
    j["signature"] = signature(r.seifert);
    j["genus"] = r.genus;
    j["dim_hfk_top"] = r.dim_hfk_top;
    UnitCircleRoots roots = unit_circle_roots(r.delta);
    j["unit_circle_root"] = roots.empty() ? json(nullptr)
                                          : json({{"re", to_string(roots.real())}, {"im_squared", to_string(roots.imag_squared())}});
    j["jsj"] = r.jsj.to_string();
    j["cover6"] = r.cover6 ? json(*r.cover6) : json(nullptr);
    j["aliases"] = r.aliases;
    emit(j);
  }

  void lambda1() {
    KnotRecord r = pretzel_record("lambda_1");
    LaurentPoly p1 = p1_from_theta(theta(r));
    Rational a = lambda1_shortcut(r.delta, p1);
    if (a != lambda1_residue(r.delta, p1)) throw InternalError("lambda_1 routes disagree");
    emit_scalar("lambda1", r, to_string(a));
  }

  void v3() {
    KnotRecord r = pretzel_record("v_3");
    emit_scalar("v3", r, to_string(v3_from_theta(theta(r))));
  }

  void covers() {
    Rational slope = parse_rational(cfg_.slope);
    if (slope.get_den() != 1 || !slope.get_num().fits_slong_p()) {
      throw UsageError("covers needs an integral --slope, got " + cfg_.slope);
    }
    if (cfg_.index < 1 || cfg_.index > kMaxLowIndex) {
      throw UsageError("--index must lie in 1.." + std::to_string(kMaxLowIndex));
    }
    KnotRecord r = census().lookup(cfg_.knot);
    KnotGroup g = wirtinger(checked_pd(r));
    auto pres = tietze_simplify(surgery_presentation(g.presentation, g.meridian, g.longitude, slope.get_num().get_si()));
    LowIndexOptions opt;
    opt.max_index = cfg_.index;
    opt.node_budget = cfg_.budget;
    opt.workers = cfg_.workers;
    LowIndexResult res = low_index(pres, opt);
    if (cfg_.json) {
      json counts;
      for (const auto& [i, c] : res.counts) counts[std::to_string(i)] = c;
      emit({{"knot", r.spec.to_string()}, {"slope", to_string(slope)}, {"counts", counts}, {"nodes", res.nodes}});
    } else {
      for (const auto& [i, c] : res.counts) out_ << i << ": " << c << '\n';
    }
  }

  void characterize() {
    PipelineOptions opt;
    opt.recompute_covers = cfg_.recompute_covers;
    opt.low_index.node_budget = cfg_.budget;
    opt.low_index.workers = cfg_.workers;
    report(characterize_zero(census(), parse_knot_spec(cfg_.knot), opt));
  }

  void distinguish() {
    report(charslope::distinguish(census(), parse_knot_spec(cfg_.knot), parse_knot_spec(cfg_.other),
                                  parse_rational(cfg_.slope)));
  }

 private:
  const Census& census() {
    if (!census_) {
      std::filesystem::path dir = cfg_.fixtures.empty() ? default_fixture_dir() : std::filesystem::path(cfg_.fixtures);
      census_ = std::make_unique<Census>(Census::load(dir));
    }
    return *census_;
  }

  KnotRecord pretzel_record(const std::string& what) {
    KnotRecord r = census().lookup(cfg_.knot);
    if (r.spec.family != KnotSpec::Family::pretzel) {
      throw DomainError(what + " is implemented for the pretzel family P(-3,3,2n+1) only");
    }
    return r;
  }

  static LaurentPoly theta(const KnotRecord& r) {
    const auto& v = r.spec.pretzel;
    return pretzel_theta_hat(PretzelParams::make(v[0], v[1], v[2]));
  }

  void emit(const json& j) {
    if (cfg_.json) {
      out_ << j.dump(2) << '\n';
      return;
    }
    for (const auto& [key, value] : j.items()) {
      out_ << key << ": ";
      if (value.is_string()) {
        out_ << value.get<std::string>();
      } else if (value.is_null()) {
        out_ << "-";
      } else if (value.is_array() && value.empty()) {
        out_ << "-";
      } else if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) out_ << (i ? ", " : "") << value[i].get<std::string>();
      } else if (value.is_object()) {
        bool first = true;
        for (const auto& [k, v] : value.items()) {
          out_ << (first ? "" : ", ") << k << " = " << v.get<std::string>();
          first = false;
        }
      } else {
        out_ << value.dump();
      }
      out_ << '\n';
    }
  }

  void emit_scalar(const std::string& key, const KnotRecord& r, const std::string& value) {
    if (cfg_.json) {
      emit({{"knot", r.spec.to_string()}, {key, value}});
    } else {
      out_ << value << '\n';
    }
  }

  void report(const Report& r) { out_ << (cfg_.json ? r.to_json() + "\n" : r.to_text()); }

  const Config& cfg_;
  std::ostream& out_;
  std::unique_ptr<Census> census_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Invariants and 0-surgery characterization reports for genus-one nearly fibered knots", "charslope"};
  app.footer(kKnotGrammar);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json, "Machine-readable JSON output");
  app.add_option("--fixtures", cfg.fixtures, "Fixture directory (default: $CHARSLOPE_FIXTURE_DIR or the built-in path)");

  auto* inv = app.add_subcommand("invariants", "Seifert-matrix invariants and tabulated data");
  inv->add_option("knot", cfg.knot, "Knot name")->required();
  auto* l1 = app.add_subcommand("lambda1", "lambda_1(S^3_0(K); 0) for a pretzel P(-3,3,2n+1)");
  l1->add_option("knot", cfg.knot, "Knot name")->required();
  auto* v3 = app.add_subcommand("v3", "The degree-3 finite-type invariant v_3 for a pretzel P(-3,3,2n+1)");
  v3->add_option("knot", cfg.knot, "Knot name")->required();
  auto* cov = app.add_subcommand("covers", "Conjugacy classes of low-index subgroups of pi_1(S^3_r(K))");
  cov->add_option("knot", cfg.knot, "Knot name")->required();
  cov->add_option("--slope", cfg.slope, "Integral surgery slope")->capture_default_str();
  cov->add_option("--index", cfg.index, "Largest subgroup index")->capture_default_str();
  cov->add_option("--budget", cfg.budget, "Search node budget")->capture_default_str();
  cov->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  auto* ch = app.add_subcommand("characterize", "Replay the 0-surgery characterization argument");
  ch->add_option("knot", cfg.knot, "Knot name")->required();
  ch->add_flag("--recompute-covers", cfg.recompute_covers, "Recount index-6 covers instead of reading fixtures");
  ch->add_option("--budget", cfg.budget, "Search node budget for recomputed covers")->capture_default_str();
  ch->add_option("--workers", cfg.workers, "Worker threads for recomputed covers")->capture_default_str()->check(CLI::Range(1u, 256u));
  auto* dis = app.add_subcommand("distinguish", "Compare S^3_r(A) with S^3_r(B)");
  dis->add_option("a", cfg.knot, "First knot")->required();
  dis->add_option("b", cfg.other, "Second knot")->required();
  dis->add_option("--slope", cfg.slope, "Surgery slope p/q")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  Runner runner(cfg, out);
  try {
    if (inv->parsed()) runner.invariants();
    if (l1->parsed()) runner.lambda1();
    if (v3->parsed()) runner.v3();
    if (cov->parsed()) runner.covers();
    if (ch->parsed()) runner.characterize();
    if (dis->parsed()) runner.distinguish();
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << '\n';
    for (const auto& [i, c] : e.partial().counts) err << "  complete through index " << i << ": " << c << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << kKnotGrammar << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace charslope::cli
