#include "orbitforge/json_io.hpp"

#include <fstream>
#include <sstream>

#include "orbitforge/error.hpp"
#include "orbitforge/lie.hpp"

namespace orbitforge {

Json to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  require(j.is_string(), "rational is a string \"p/q\" or an integer");
  return parse_rat(j.get<std::string>());
}

Json to_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const QMat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

QMat qmat_from_json(const Json& j) {
  require(j.is_array(), "matrix is an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  QMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    require(j[i].is_array() && j[i].size() == cols, "matrix rows have equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rat_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const Partition& p) { return p.parts; }

Json to_json(const ClassLabel& c) {
  Json a = Json::array();
  for (const auto& [l, p] : c.pairs) a.push_back(Json::array({to_json(l), to_json(p)}));
  return a;
}

ClassLabel class_label_from_json(const Json& j) {
  require(j.is_array(), "class label is an array of [eigenvalue, [parts]] pairs");
  std::vector<std::pair<Rat, Partition>> pairs;
  for (const auto& e : j) {
    require(e.is_array() && e.size() == 2 && e[1].is_array(), "label entry is [eigenvalue, [parts]]");
    pairs.emplace_back(rat_from_json(e[0]), Partition(e[1].get<std::vector<int>>()));
  }
  return make_label(std::move(pairs));
}

Json to_json(const MClassLabel& c) {
  Json a = Json::array();
  for (const auto& l : c.per_block) a.push_back(to_json(l));
  return a;
}

MClassLabel mclass_from_text(const LeviSpec& levi, const std::string& text) {
  if (text == "trivial") return trivial_class(levi);
  if (text == "regular") return regular_unipotent_class(levi);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception&) {
    fail_precondition("class is \"trivial\", \"regular\" or a JSON list of per-block labels");
  }
  require(j.is_array() && j.size() == levi.blocks(), "one class label per Levi block");
  MClassLabel c;
  for (const auto& b : j) c.per_block.push_back(class_label_from_json(b));
  return c;
}

Json to_json(const MPoly& p) { return to_string(p); }

Json subspace_matrices(const Subspace& s) {
  std::size_t n = 0;
  while (n * n < s.ambient_dim()) ++n;
  require(n * n == s.ambient_dim(), "subspace of a matrix space");
  GroupContext ctx(n);
  Json a = Json::array();
  for (const auto& m : ctx.matrices(s)) a.push_back(to_json(m));
  return a;
}

Json to_json(const LieTriple& t) {
  return Json{{"X", to_json(t.X)}, {"H", to_json(t.H)}, {"Y", to_json(t.Y)}};
}

Json to_json(const GradedDecomp& g) {
  Json a = Json::array();
  for (const auto& [k, s] : g.levels)
    a.push_back(Json{{"level", k}, {"dim", s.dim()}, {"basis", subspace_matrices(s)}});
  return a;
}

Json to_json(const ParabolicData& pd) {
  auto sub = [](const Subspace& s) {
    return Json{{"dim", s.dim()}, {"basis", subspace_matrices(s)}};
  };
  return Json{{"H", to_json(pd.H)}, {"levels", to_json(pd.grading)}, {"q", sub(pd.q)},
              {"l", sub(pd.l)},     {"u", sub(pd.u)},               {"uprime", sub(pd.uprime)}};
}

Json to_json(const InductionResult& r) {
  return Json{{"label", to_json(r.label)},
              {"samples_used", r.samples_used},
              {"unanimous", r.unanimous},
              {"dominance_max_applied", r.dominance_max_applied},
              {"witness", to_json(r.witness)}};
}

Json to_json(const RichardsonReport& r) {
  return Json{{"result", to_json(r.result)}, {"predicted", to_json(r.predicted)}, {"passed", r.passed}};
}

Json to_json(const CodimReport& r) {
  return Json{{"induced", to_json(r.induced)},     {"unanimous", r.unanimous},
              {"dim_m_mu", r.dim_m_mu},            {"dim_g_gamma", r.dim_g_gamma},
              {"dim_p_gamma", r.dim_p_gamma},      {"centralizer_in_p", r.centralizer_in_p},
              {"passed", r.passed}};
}

Json to_json(const AssocReport& r) {
  auto cases = [](const std::vector<AssocCase>& cs) {
    Json a = Json::array();
    for (const auto& c : cs)
      a.push_back(Json{{"case", c.description}, {"label", to_json(c.label)}, {"unanimous", c.unanimous}});
    return a;
  };
  return Json{{"base", to_json(r.base)},
              {"permutations", cases(r.permutations)},
              {"chains", cases(r.chains)},
              {"passed", r.passed}};
}

Json to_json(const DescentReport& r) {
  Json right = Json::array();
  for (const auto& [l, p] : r.right) right.push_back(Json::array({to_json(l), to_json(p)}));
  return Json{{"left", to_json(r.left)}, {"right", right}, {"unanimous", r.unanimous},
              {"passed", r.passed}};
}

Json to_json(const GNReport& r) {
  return Json{{"samples", r.samples}, {"conjugate", r.conjugate}, {"passed", r.passed}};
}

Json to_json(const SpecialityReport& r) {
  return Json{{"open_orbit_found", r.open_orbit_found},
              {"witness_point", to_json(r.witness_point)},
              {"singular_gcd", to_json(r.singular_gcd)},
              {"is_special", r.is_special}};
}

Json to_json(const CharacterLawReport& r) {
  return Json{{"trials", r.trials}, {"holds", r.holds}, {"passed", r.passed}};
}

Json to_json(const RegularityReport& r) {
  return Json{{"d", r.d},
              {"p_nonzero_at_x", r.p_nonzero_at_x},
              {"hessian_full_rank", r.hessian_full_rank},
              {"hessian_points_tried", r.hessian_points_tried},
              {"infinitesimal_character", r.infinitesimal_character},
              {"phi_generic", r.phi_generic},
              {"phi_proportional_to_y", r.phi_proportional_to_y},
              {"proportionality", r.proportionality ? to_json(*r.proportionality) : Json(nullptr)},
              {"passed", r.passed}};
}

Json to_json(const FibrationReport& r) {
  return Json{{"equivariant", r.equivariant},
              {"quotient_dim", r.quotient_dim},
              {"fiber_dim", r.fiber_dim},
              {"eta", to_json(r.eta)},
              {"total", Json{{"prehomogeneous", r.total_prehomogeneous},
                             {"special", r.total_special},
                             {"gcd", to_json(r.total_gcd)}}},
              {"quotient", Json{{"prehomogeneous", r.quotient_prehomogeneous},
                                {"special", r.quotient_special},
                                {"gcd", to_json(r.quotient_gcd)}}},
              {"fiber", Json{{"prehomogeneous", r.fiber_prehomogeneous},
                             {"special", r.fiber_special},
                             {"gcd", to_json(r.fiber_gcd)}}},
              {"prehomogeneity_equivalence", r.prehomogeneity_equivalence},
              {"speciality_equivalence", r.speciality_equivalence},
              {"passed", r.passed}};
}

Json to_json(const NCResult& r) {
  return Json{{"nc_dim", r.nc_basis.dim()},
              {"nc_basis", subspace_matrices(r.nc_basis)},
              {"start_dim", r.start.dim()},
              {"nq_invariant_dim", r.nq_invariant.dim()},
              {"q_dim", r.q.dim()},
              {"iterations", r.iterations},
              {"randomized_confirmations", r.randomized_confirmations},
              {"randomized_match", r.randomized_match},
              {"is_p_ideal", r.is_p_ideal}};
}

Json to_json(const TranslateReport& r) {
  return Json{{"translates", r.translates},
              {"in_class", r.in_class},
              {"same_parabolic", r.same_parabolic},
              {"passed", r.passed}};
}

Json to_json(const ConjectureVerdict& v) {
  Json j{{"levi", v.levi.composition},
         {"class", to_json(v.cls)},
         {"gamma", to_json(v.gamma)},
         {"gamma_label", to_json(v.gamma_label)},
         {"nc_dim", v.nc_dim},
         {"quotient_dim", v.quotient_dim},
         {"speciality", to_json(v.speciality)},
         {"verdict", to_string(v.verdict)},
         {"reason", v.reason},
         {"nc", to_json(v.nc)},
         {"translates", to_json(v.translates)},
         {"nq_translates", v.nq_translates ? to_json(*v.nq_translates) : Json(nullptr)},
         {"equivariant", v.equivariant},
         {"fibration", v.fibration ? to_json(*v.fibration) : Json(nullptr)},
         {"fibration_quotient_agrees", v.fibration_quotient_agrees}};
  return j;
}

Json to_json(const BatchReport& r) {
  Json cases = Json::array();
  for (const auto& v : r.cases) cases.push_back(to_json(v));
  return Json{{"schema_version", schema_version},
              {"cases", cases},
              {"summary", Json{{"special", r.summary.special},
                               {"not_special", r.summary.not_special},
                               {"inconclusive", r.summary.inconclusive}}}};
}

namespace {

MPoly poly_from_terms(const Json& j, std::size_t nvars) {
  require(j.is_array(), "polynomial is a list of [coefficient, [exponents]] terms");
  MPoly p(nvars);
  for (const auto& t : j) {
    require(t.is_array() && t.size() == 2 && t[1].is_array() && t[1].size() == nvars,
            "term is [coefficient, [one exponent per coordinate]]");
    Monomial m;
    for (const auto& e : t[1]) {
      require(e.is_number_integer() && e.get<long>() >= 0, "exponents are nonnegative integers");
      m.push_back(e.get<std::uint32_t>());
    }
    p.add_term(m, rat_from_json(t[0]));
  }
  return p;
}

}  // namespace

AffineActionModel model_from_json(const Json& j) {
  require(j.is_object(), "model is a JSON object");
  if (j.contains("catalog")) {
    const auto name = j.at("catalog").get<std::string>();
    if (name == "point") return point_model();
    if (name == "torus-scaling") return torus_scaling_model();
    if (name == "translation")
      return translation_model(j.value("d", std::size_t{1}));
    if (name == "zero") return zero_action_model(j.value("d", std::size_t{1}));
    if (name == "regular-g2") return regular_nilpotent_g2_model(j.value("n", std::size_t{2}));
    fail_precondition("known catalog model: " + name);
  }
  AffineActionModel m;
  m.coord_dim = j.at("coord_dim").get<std::size_t>();
  for (const auto& g : j.at("generators")) m.generators.push_back(qmat_from_json(g));
  const auto& f = j.at("vector_fields");
  require(f.size() == m.generators.size(), "one vector field per generator");
  m.vector_fields = PolyMat(m.generators.size(), m.coord_dim, m.coord_dim);
  for (std::size_t i = 0; i < f.size(); ++i) {
    require(f[i].size() == m.coord_dim, "vector field has one component per coordinate");
    for (std::size_t c = 0; c < m.coord_dim; ++c)
      m.vector_fields(i, c) = poly_from_terms(f[i][c], m.coord_dim);
  }
  require(bracket_compatible(m), "vector fields are bracket-compatible with the generators");
  return m;
}

Json read_json_argument(const std::string& arg) {
  std::string text = arg;
  const auto first = arg.find_first_not_of(" \t\n");
  if (first == std::string::npos || (arg[first] != '[' && arg[first] != '{')) {
    std::ifstream in(arg);
    require(static_cast<bool>(in), "readable JSON file: " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail_precondition(std::string("valid JSON: ") + e.what());
  }
}

}  // namespace orbitforge
