#include "mil/problem.hpp"

#include <cstdlib>
#include <fstream>

#include "mil/parse.hpp"

namespace mil {
namespace {

[[noreturn]] void bad(const std::string& msg) { fail(Errc::parse_error, msg); }

FieldPtr parse_field(const Json& doc) {
  if (!doc.contains("field") || !doc["field"].is_object()) bad("missing \"field\" block");
  const Json& f = doc["field"];
  if (!f.contains("char")) bad("field block needs \"char\"");
  uint32_t p = f["char"].get<uint32_t>();
  uint32_t k = f.value("degree", 1u);
  FieldSpec spec;
  if (f.contains("modulus")) {
    spec.p = p;
    spec.k = k;
    spec.modulus = f["modulus"].get<std::vector<uint32_t>>();
  } else {
    spec = Field::default_spec(p, k);
  }
  return std::make_shared<Field>(spec);
}

Mat parse_matrix(const FieldPtr& field, const Json& rows) {
  if (!rows.is_array() || rows.empty()) bad("matrix must be a nonempty array of rows");
  const int n = static_cast<int>(rows.size());
  Mat m(field, n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) bad("matrix rows must be square");
    for (int j = 0; j < n; ++j)
      m.at(i, j) = parse_scalar(field, row[static_cast<size_t>(j)].get<std::string>());
  }
  return m;
}

std::vector<Poly> parse_poly_list(const RingPtr& ring, const Json& arr, const char* what) {
  if (!arr.is_array()) bad(std::string(what) + " must be an array of polynomial strings");
  std::vector<Poly> out;
  for (const auto& item : arr) out.push_back(parse_poly(ring, item.get<std::string>()));
  return out;
}

}  // namespace

const Hsop& Problem::hsop() const {
  if (hsop_polys.empty()) fail(Errc::invalid_argument, "problem has no hsop block");
  if (!hsop_) hsop_ = std::make_shared<Hsop>(act(), hsop_polys, gopts);
  return *hsop_;
}

Problem load_problem(const Json& doc) {
  Problem prob;
  prob.name = doc.value("name", std::string("problem"));
  prob.field = parse_field(doc);

  if (!doc.contains("variables")) bad("missing \"variables\"");
  auto vars = doc["variables"].get<std::vector<std::string>>();
  if (vars.empty() || static_cast<int>(vars.size()) > kMaxUserVars)
    bad("between 1 and " + std::to_string(kMaxUserVars) + " variables supported");
  if (prob.field->extension_degree() > 1)
    for (const auto& v : vars)
      if (v == "a") bad("variable name \"a\" collides with the extension generator");
  prob.ring = make_ring(prob.field, vars);

  if (doc.contains("pair_budget")) prob.gopts.pair_budget = doc["pair_budget"].get<long>();
  if (const char* env = std::getenv("MIL_PAIR_BUDGET")) {
    long value = std::strtol(env, nullptr, 10);
    if (value > 0) prob.gopts.pair_budget = value;
  }

  if (doc.contains("generators")) {
    const Json& gens = doc["generators"];
    if (!gens.is_array() || gens.empty()) bad("\"generators\" must be a nonempty array of matrices");
    std::vector<Mat> mats;
    for (const auto& g : gens) {
      Mat m = parse_matrix(prob.field, g);
      if (m.rows() != prob.ring->n()) bad("generator size does not match variable count");
      mats.push_back(std::move(m));
    }
    long cap = doc.value("order_cap", 10000L);
    prob.action.emplace(MatrixGroup::closure(prob.field, std::move(mats), cap), prob.ring);
  }

  if (doc.contains("hsop")) {
    prob.hsop_polys = parse_poly_list(prob.ring, doc["hsop"], "hsop");
    // validated eagerly: invariance and the zero-dimensionality of the ideal
    if (prob.action) prob.hsop();
  }

  if (doc.contains("invariant_generators"))
    prob.invariant_generators =
        parse_poly_list(prob.ring, doc["invariant_generators"], "invariant_generators");

  if (doc.contains("relations")) {
    if (prob.invariant_generators.empty()) bad("\"relations\" requires \"invariant_generators\"");
    std::vector<std::string> tnames;
    std::vector<int> tweights;
    for (size_t i = 0; i < prob.invariant_generators.size(); ++i) {
      tnames.push_back("t" + std::to_string(i + 1));
      tweights.push_back(prob.invariant_generators[i].degree());
    }
    RingPtr formal = make_ring(prob.field, tnames, {}, tweights);
    prob.relations = parse_poly_list(formal, doc["relations"], "relations");
  }

  if (doc.contains("presentation")) {
    const Json& pres = doc["presentation"];
    if (!pres.contains("variables") || !pres.contains("degrees")) bad("presentation needs variables and degrees");
    auto pvars = pres["variables"].get<std::vector<std::string>>();
    auto pdegs = pres["degrees"].get<std::vector<int>>();
    if (pvars.size() != pdegs.size()) bad("presentation variables/degrees length mismatch");
    RingPtr pring = make_ring(prob.field, pvars, {}, pdegs);
    std::vector<Poly> prels;
    if (pres.contains("relations")) prels = parse_poly_list(pring, pres["relations"], "relations");
    if (!pres.contains("hsop")) bad("presentation needs an hsop");
    std::vector<Poly> physop = parse_poly_list(pring, pres["hsop"], "presentation hsop");
    bool cm = pres.value("cm_asserted", false);
    prob.presentation = std::make_shared<PresentedAlgebra>(pring, std::move(prels),
                                                           std::move(physop), cm, prob.gopts);
  }

  if (doc.contains("windows")) {
    const Json& w = doc["windows"];
    if (w.contains("k_from")) prob.window_from = w["k_from"].get<int>();
    if (w.contains("k_to")) prob.window_to = w["k_to"].get<int>();
    if (w.contains("max_degree")) prob.max_degree = w["max_degree"].get<int>();
    if (w.contains("floor")) prob.a_floor = w["floor"].get<int>();
  }

  return prob;
}

Problem load_problem_text(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) bad("input is not valid JSON");
  return load_problem(doc);
}

Problem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_problem_text(text);
}

}  // namespace mil
