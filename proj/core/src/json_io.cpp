#include "linquo/json_io.hpp"

namespace linquo {

Json to_json(const MonomialIdeal& ideal) {
  Json j;
  j["n"] = ideal.vars();
  Json gens = Json::array();
  for (const auto& g : ideal.gens()) gens.push_back(g.str());
  j["gens"] = std::move(gens);
  return j;
}

MonomialIdeal ideal_from_json(const Json& j) {
  require(j.is_object() && j.contains("n") && j.contains("gens"), errc::invalid_input,
          "ideal JSON needs fields 'n' and 'gens'");
  require(j["n"].is_number_integer(), errc::invalid_input, "field 'n' must be an integer");
  int n = j["n"].get<int>();
  require(j["gens"].is_array() && !j["gens"].empty(), errc::invalid_input,
          "field 'gens' must be a nonempty array");
  std::vector<Monomial> gens;
  for (const auto& g : j["gens"]) {
    require(g.is_string(), errc::invalid_input, "field 'gens' must hold strings");
    gens.push_back(Monomial::parse(n, g.get<std::string>()));
  }
  return MonomialIdeal::from_generators(n, std::move(gens));
}

Json to_json(const SimplicialComplex& complex) {
  Json j;
  j["n"] = complex.vertices();
  j["facets"] = complex.facets();
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  require(j.is_object() && j.contains("n") && j.contains("facets"), errc::invalid_input,
          "complex JSON needs fields 'n' and 'facets'");
  int n = j["n"].get<int>();
  require(j["facets"].is_array(), errc::invalid_input, "field 'facets' must be an array");
  std::vector<std::vector<int>> facets;
  for (const auto& f : j["facets"]) facets.push_back(f.get<std::vector<int>>());
  return SimplicialComplex::from_facets(n, std::move(facets));
}

Json to_json(const QuotientCertificate& certificate) {
  Json j;
  j["n"] = certificate.ideal.vars();
  Json order = Json::array();
  for (const auto& g : certificate.order) order.push_back(g.str());
  j["order"] = std::move(order);
  j["sets"] = certificate.sets;
  return j;
}

Json to_json(const QuotientFailure& failure) {
  Json j;
  j["failed_at"] = failure.index_i;
  j["witness"] = failure.witness_j;
  Json colon = Json::array();
  for (const auto& g : failure.colon_gens) colon.push_back(g.str());
  j["colon"] = std::move(colon);
  return j;
}

Json to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, value] : table.entries()) {
    Json e;
    e["i"] = key.first;
    e["j"] = key.second;
    e["value"] = value;
    entries.push_back(std::move(e));
  }
  Json j;
  j["entries"] = std::move(entries);
  j["projdim"] = table.projdim();
  j["regularity"] = table.regularity();
  int d = 0;
  bool linear = table.linear(&d);
  j["linear"] = linear;
  if (linear) j["linear_degree"] = d;
  return j;
}

Json to_json(const KPolynomial& p) {
  Json j;
  j["denominator_power"] = p.denom_power;
  j["coefficients"] = p.coeffs;
  j["text"] = p.str();
  return j;
}

Json to_json(const GradedFreeResolution& resolution) {
  Json j;
  j["n"] = resolution.n;
  j["target"] = resolution.target == GradedFreeResolution::Target::ideal ? "ideal" : "quotient";
  j["shape"] = resolution.shape();
  Json modules = Json::array();
  for (const auto& stage : resolution.modules) {
    Json basis = Json::array();
    for (const auto& b : stage) {
      Json e;
      e["sigma"] = b.sigma;
      e["gen"] = b.gen.str();
      e["degree"] = b.degree;
      basis.push_back(std::move(e));
    }
    modules.push_back(std::move(basis));
  }
  j["modules"] = std::move(modules);
  auto matrix_json = [](const ResolutionMatrix& m) {
    Json mj;
    mj["rows"] = m.rows;
    mj["cols"] = m.cols;
    Json entries = Json::array();
    for (const auto& e : m.entries) {
      Json ej;
      ej["row"] = e.row;
      ej["col"] = e.col;
      ej["sign"] = e.sign;
      ej["monomial"] = e.mono.str();
      entries.push_back(std::move(ej));
    }
    mj["entries"] = std::move(entries);
    return mj;
  };
  Json diffs = Json::array();
  for (const auto& d : resolution.diffs) diffs.push_back(matrix_json(d));
  j["diffs"] = std::move(diffs);
  if (resolution.augmentation) j["augmentation"] = matrix_json(*resolution.augmentation);
  return j;
}

namespace {

Json node_to_json(const ConstructibilityCertificate::NodePtr& node) {
  Json j;
  if (node->is_leaf()) {
    j["leaf"] = node->leaf->str();
    return j;
  }
  j["split"] = Json::array({node_to_json(node->left), node_to_json(node->right)});
  j["intersection"] = node_to_json(node->intersection);
  return j;
}

ConstructibilityCertificate::NodePtr node_from_json(int n, const Json& j) {
  require(j.is_object(), errc::invalid_input, "certificate node must be an object");
  if (j.contains("leaf")) {
    return ConstructibilityCertificate::make_leaf(
        Monomial::parse(n, j["leaf"].get<std::string>()));
  }
  require(j.contains("split") && j.contains("intersection"), errc::invalid_input,
          "certificate node needs 'leaf' or 'split'+'intersection'");
  require(j["split"].is_array() && j["split"].size() == 2, errc::invalid_input,
          "'split' must hold two nodes");
  return ConstructibilityCertificate::make_split(node_from_json(n, j["split"][0]),
                                                 node_from_json(n, j["split"][1]),
                                                 node_from_json(n, j["intersection"]));
}

} // namespace

Json certificate_to_json(const ConstructibilityCertificate& certificate) {
  Json j = node_to_json(certificate.root);
  return j;
}

ConstructibilityCertificate certificate_from_json(int n, const Json& j) {
  return ConstructibilityCertificate{n, node_from_json(n, j)};
}

Json to_json(const SubwordReport& report) {
  Json j;
  j["m"] = report.word.m;
  j["word"] = report.word.letters;
  j["pi"] = report.pi.one_line();
  j["length"] = report.ell;
  j["empty_complex"] = report.empty_complex;
  if (report.empty_complex) return j;
  j["representing"] = report.representing;
  j["facets"] = report.facets;
  Json gens = Json::array();
  for (const auto& g : report.dual_ideal->gens()) gens.push_back(g.str());
  j["dual_gens"] = std::move(gens);
  j["certificate"] = to_json(*report.certificate);
  j["d_values"] = report.d_values;
  return j;
}

} // namespace linquo
