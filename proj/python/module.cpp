#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "charslope/census.hpp"
#include "charslope/loopexp.hpp"
#include "charslope/pi1.hpp"
#include "charslope/pipeline.hpp"
#include "charslope/seifert.hpp"

namespace py = pybind11;
using namespace charslope;

namespace {

const Census& census_at(const std::string& fixtures) {
  if (fixtures.empty()) return Census::standard();
  static std::map<std::string, Census> loaded;
  auto it = loaded.find(fixtures);
  if (it == loaded.end()) it = loaded.emplace(fixtures, Census::load(fixtures)).first;
  return it->second;
}

KnotRecord pretzel(const std::string& knot, const std::string& fixtures) {
  KnotRecord r = census_at(fixtures).lookup(knot);
  if (r.spec.family != KnotSpec::Family::pretzel) {
    throw DomainError("defined for the pretzel family P(-3,3,2n+1) only, got " + r.spec.to_string());
  }
  return r;
}

LaurentPoly theta(const KnotRecord& r) {
  const auto& v = r.spec.pretzel;
  return pretzel_theta_hat(PretzelParams::make(v[0], v[1], v[2]));
}

py::dict invariants(const std::string& knot, const std::string& fixtures) {
  KnotRecord r = census_at(fixtures).lookup(knot);
  py::dict d;
  d["knot"] = r.spec.to_string();
  d["seifert_matrix"] = r.seifert.rows();
  d["alexander"] = alexander(r.seifert).to_string();
  d["conway"] = conway(r.seifert).to_string();
  d["determinant"] = to_string(determinant(r.seifert));
  d["signature"] = signature(r.seifert);
  d["genus"] = r.genus;
  d["dim_hfk_top"] = r.dim_hfk_top;
  UnitCircleRoots roots = unit_circle_roots(r.delta);
  if (roots.empty()) {
    d["unit_circle_root"] = py::none();
  } else {
    d["unit_circle_root"] = py::make_tuple(to_string(roots.real()), to_string(roots.imag_squared()));
  }
  d["jsj"] = r.jsj.to_string();
  d["cover6"] = r.cover6 ? py::cast(*r.cover6) : py::none();
  d["aliases"] = r.aliases;
  return d;
}

std::map<int, std::uint64_t> covers(const std::string& knot, long slope, int index, std::uint64_t budget,
                                    unsigned workers, const std::string& fixtures) {
  KnotRecord r = census_at(fixtures).lookup(knot);
  KnotGroup g = wirtinger(checked_pd(r));
  auto pres = tietze_simplify(surgery_presentation(g.presentation, g.meridian, g.longitude, slope));
  LowIndexOptions opt;
  opt.max_index = index;
  opt.node_budget = budget;
  opt.workers = workers;
  py::gil_scoped_release release;
  return low_index(pres, opt).counts;
}

}  // namespace

PYBIND11_MODULE(_charslope, m) {
  m.doc() = "Exact invariants and 0-surgery characterization reports for genus-one nearly fibered knots.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<UsageError>(m, "UsageError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());

  m.def("default_fixture_dir", [] { return default_fixture_dir().string(); });
  m.def("canonical", [](const std::string& knot, const std::string& fixtures) {
    return census_at(fixtures).canonical(parse_knot_spec(knot)).to_string();
  }, py::arg("knot"), py::arg("fixtures") = "");
  m.def("invariants", &invariants, py::arg("knot"), py::arg("fixtures") = "");

  m.def("alexander", [](const std::vector<std::vector<std::int64_t>>& v) {
    return alexander(SeifertMatrix(v)).to_string();
  }, py::arg("seifert"));
  m.def("signature", [](const std::vector<std::vector<std::int64_t>>& v) { return signature(SeifertMatrix(v)); },
        py::arg("seifert"));
  m.def("pretzel_seifert", [](long p, long q, long r) { return pretzel_seifert(p, q, r).rows(); });
  m.def("fox_alexander", [](const std::string& pd) {
    return fox_alexander(wirtinger(parse_pd(pd)).presentation).to_string();
  }, py::arg("pd"), "Alexander polynomial of a PD code via Fox calculus.");

  m.def("lambda1", [](const std::string& knot, const std::string& fixtures) {
    KnotRecord r = pretzel(knot, fixtures);
    LaurentPoly p1 = p1_from_theta(theta(r));
    Rational a = lambda1_shortcut(r.delta, p1);
    if (a != lambda1_residue(r.delta, p1)) throw InternalError("lambda_1 routes disagree");
    return to_string(a);
  }, py::arg("knot"), py::arg("fixtures") = "");
  m.def("lambda1_routes", [](const std::string& delta, const std::string& p1) {
    LaurentPoly d = LaurentPoly::parse(delta), p = LaurentPoly::parse(p1);
    return py::make_tuple(to_string(lambda1_shortcut(d, p)), to_string(lambda1_residue(d, p)));
  }, py::arg("delta"), py::arg("p1"), "lambda_1 by the closed form and by residues.");
  m.def("v3", [](const std::string& knot, const std::string& fixtures) {
    return to_string(v3_from_theta(theta(pretzel(knot, fixtures))));
  }, py::arg("knot"), py::arg("fixtures") = "");

  m.def("covers", &covers, py::arg("knot"), py::arg("slope") = 0, py::arg("index") = 6,
        py::arg("budget") = LowIndexOptions{}.node_budget, py::arg("workers") = 1, py::arg("fixtures") = "");

  m.def("characterize", [](const std::string& knot, bool recompute_covers, const std::string& fixtures) {
    PipelineOptions opt;
    opt.recompute_covers = recompute_covers;
    return characterize_zero(census_at(fixtures), parse_knot_spec(knot), opt).to_json();
  }, py::arg("knot"), py::arg("recompute_covers") = false, py::arg("fixtures") = "",
     "Report JSON for the 0-surgery characterization argument.");
  m.def("distinguish", [](const std::string& a, const std::string& b, const std::string& slope,
                          const std::string& fixtures) {
    return distinguish(census_at(fixtures), parse_knot_spec(a), parse_knot_spec(b), parse_rational(slope)).to_json();
  }, py::arg("a"), py::arg("b"), py::arg("slope"), py::arg("fixtures") = "");
}
