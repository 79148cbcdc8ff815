// linquo: monomial ideals, linear quotients, explicit resolutions,
// simplicial complexes and subword complexes from one command line.
//
// Exit codes: 0 success, 2 negative classification, 3 unknown or budget
// exhausted, 4 input error, 5 internal invariant violation.

#include <chrono>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "linquo/json_io.hpp"
#include "linquo/oracle.hpp"
#include "linquo/sweeps.hpp"

using namespace linquo;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 2;
constexpr int exit_unknown = 3;
constexpr int exit_input = 4;
constexpr int exit_invariant = 5;

struct Options {
  std::string format = "pretty";
  int characteristic = 0;
  std::uint64_t seed = 20080214;
  std::uint64_t budget = 1000000;
  int threads = 1;
  bool json_flag = false;

  bool json() const { return json_flag || format == "json"; }
  FieldSpec field() const {
    return characteristic == 0 ? FieldSpec::rationals() : FieldSpec::prime(characteristic);
  }
};

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Deterministic report envelope; wall time goes to stderr so byte-identical
/// inputs produce byte-identical stdout.
class Report {
public:
  Report(std::string command, std::string input_echo)
      : start_(std::chrono::steady_clock::now()), command_(std::move(command)) {
    std::ostringstream digest;
    digest << std::hex << fnv1a(input_echo);
    body_["command"] = command_;
    body_["input_digest"] = digest.str();
  }

  Json& body() { return body_; }
  void warn(const std::string& message) { warnings_.push_back(message); }

  int emit(const Options& opt, int code, const std::string& pretty) {
    body_["warnings"] = warnings_;
    if (opt.json()) {
      std::cout << body_.dump(2) << '\n';
    } else {
      std::cout << pretty;
      if (!warnings_.empty()) {
        std::cout << "warnings:\n";
        for (const auto& w : warnings_) std::cout << "  - " << w << '\n';
      }
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
    std::cerr << command_ << ": " << elapsed.count() << " ms\n";
    return code;
  }

private:
  std::chrono::steady_clock::time_point start_;
  std::string command_;
  Json body_;
  std::vector<std::string> warnings_;
};

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::invalid_input, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::invalid_input, std::string("bad JSON in ") + path + ": " + e.what());
  }
  return j;
}

MonomialIdeal load_ideal(const std::string& path) { return ideal_from_json(load_json_file(path)); }
SimplicialComplex load_complex(const std::string& path) {
  return complex_from_json(load_json_file(path));
}

Permutation parse_pi(int m, const std::string& text) {
  if (text.rfind("cycle:", 0) == 0) return Permutation::from_cycles(m, text.substr(6));
  if (text.rfind("oneline:", 0) == 0) {
    std::vector<int> values;
    std::istringstream in(text.substr(8));
    std::string tok;
    while (std::getline(in, tok, ',')) values.push_back(std::stoi(tok));
    return Permutation::from_one_line(std::move(values));
  }
  if (!text.empty() && text.front() == '(') return Permutation::from_cycles(m, text);
  fail(errc::invalid_input, "permutations are written cycle:(1 2 4) or oneline:2,4,3,1");
}

std::vector<int> parse_letters(const std::string& text) {
  std::vector<int> letters;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) letters.push_back(std::stoi(tok));
  return letters;
}

std::string ideal_pretty(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < ideal.gens().size(); ++i)
    out << ideal.gens()[i].str() << (i + 1 < ideal.size() ? ", " : "");
  out << ')';
  return out.str();
}

std::string resolution_pretty(const GradedFreeResolution& res) {
  std::ostringstream out;
  out << res.shape() << "\n";
  if (res.augmentation) out << "augmentation:\n" << matrix_pretty(*res.augmentation);
  for (std::size_t i = 0; i < res.diffs.size(); ++i)
    out << "d" << i + 1 << ":\n" << matrix_pretty(res.diffs[i]);
  return out.str();
}

// ---------------------------------------------------------------- ideal ---

int cmd_ideal_betti(const Options& opt, const std::string& in, int budget) {
  auto ideal = load_ideal(in);
  Report report("ideal betti", to_json(ideal).dump());
  auto table = oracle_betti(ideal, opt.field(), budget);
  report.body()["ideal"] = to_json(ideal);
  report.body()["field_characteristic"] = opt.characteristic;
  report.body()["betti"] = to_json(table.betti);
  std::ostringstream pretty;
  pretty << "I = " << ideal_pretty(ideal) << "\n"
         << table.betti.grid() << "projdim(I) = " << table.projdim_ideal
         << (table.linear ? ", linear resolution" : ", not linear") << "\n";
  return report.emit(opt, exit_ok, pretty.str());
}

int cmd_ideal_quotients(const Options& opt, const std::string& in, const std::string& order_csv) {
  auto ideal = load_ideal(in);
  Report report("ideal quotients", to_json(ideal).dump());
  if (!order_csv.empty()) {
    std::vector<Monomial> order;
    std::istringstream s(order_csv);
    std::string tok;
    while (std::getline(s, tok, ',')) order.push_back(Monomial::parse(ideal.vars(), tok));
    auto res = check_order(ideal, order);
    if (auto* cert = std::get_if<QuotientCertificate>(&res)) {
      report.body()["certificate"] = to_json(*cert);
      return report.emit(opt, exit_ok, "linear quotients confirmed\n");
    }
    auto& failure = std::get<QuotientFailure>(res);
    report.body()["failure"] = to_json(failure);
    std::ostringstream pretty;
    pretty << "not linear quotients: fails at position " << failure.index_i << "\n";
    return report.emit(opt, exit_negative, pretty.str());
  }
  auto found = find_order(ideal, opt.budget);
  if (found.status == SearchStatus::found) {
    report.body()["certificate"] = to_json(*found.certificate);
    std::ostringstream pretty;
    pretty << "linear quotients order:";
    for (const auto& g : found.certificate->order) pretty << ' ' << g.str();
    pretty << "\n";
    return report.emit(opt, exit_ok, pretty.str());
  }
  report.body()["status"] = found.status == SearchStatus::none ? "none" : "unknown";
  return report.emit(opt, found.status == SearchStatus::none ? exit_negative : exit_unknown,
                     found.status == SearchStatus::none ? "no linear quotients order exists\n"
                                                        : "search budget exhausted\n");
}

int cmd_ideal_stable(const Options& opt, const std::string& in) {
  auto ideal = load_ideal(in);
  Report report("ideal stable", to_json(ideal).dump());
  bool stable = is_stable(ideal);
  report.body()["stable"] = stable;
  return report.emit(opt, stable ? exit_ok : exit_negative,
                     stable ? "stable\n" : "not stable\n");
}

int cmd_ideal_intersect(const Options& opt, const std::string& in, const std::string& in2) {
  auto a = load_ideal(in);
  auto b = load_ideal(in2);
  Report report("ideal intersect", to_json(a).dump() + to_json(b).dump());
  auto c = intersect(a, b);
  report.body()["intersection"] = to_json(c);
  return report.emit(opt, exit_ok, ideal_pretty(c) + "\n");
}

int cmd_ideal_colon(const Options& opt, const std::string& in, const std::string& by) {
  auto a = load_ideal(in);
  Report report("ideal colon", to_json(a).dump() + by);
  auto w = Monomial::parse(a.vars(), by);
  auto c = colon_by(a, w);
  report.body()["colon"] = to_json(c);
  return report.emit(opt, exit_ok, ideal_pretty(c) + "\n");
}

int cmd_ideal_dim_depth(const Options& opt, const std::string& in) {
  auto ideal = load_ideal(in);
  Report report("ideal dim-depth", to_json(ideal).dump());
  auto rad = radical_and_primes(ideal);
  auto [depth, projdim] = oracle_depth_projdim(ideal, opt.field());
  report.body()["radical"] = to_json(rad.radical);
  report.body()["minimal_primes"] = rad.primes.primes;
  report.body()["dim_quotient"] = rad.krull_dim_quotient;
  report.body()["depth_quotient"] = depth;
  report.body()["projdim_quotient"] = projdim;
  std::ostringstream pretty;
  pretty << "dim S/I = " << rad.krull_dim_quotient << ", depth S/I = " << depth
         << ", projdim S/I = " << projdim << "\n";
  return report.emit(opt, exit_ok, pretty.str());
}

// ----------------------------------------------------------- lexsegment ---

Lexsegment segment_from_flags(int n, int d, const std::string& u, const std::string& v) {
  return build_segment(n, d, Monomial::parse(n, u), Monomial::parse(n, v));
}

int cmd_lexsegment_classify(const Options& opt, int n, int d, const std::string& u,
                            const std::string& v) {
  auto seg = segment_from_flags(n, d, u, v);
  Report report("lexsegment classify", u + "|" + v + std::to_string(n) + std::to_string(d));
  auto cls = classify(seg);
  auto dim = krull_dim_formula(seg);
  auto depth = depth_formula(seg);
  auto cm = is_cohen_macaulay(seg);
  report.body()["generators"] = to_json(seg.ideal())["gens"];
  report.body()["completely"] = cls.completely;
  report.body()["completely_tag"] = to_string(cls.completely_tag);
  report.body()["linear_resolution"] = cls.linear_resolution;
  report.body()["linear_resolution_tag"] = to_string(cls.linres_tag);
  report.body()["dim_quotient"] = dim.dim;
  report.body()["power_of_max_ideal"] = dim.is_power_of_max_ideal;
  report.body()["depth_quotient"] = depth.depth;
  report.body()["projdim_quotient"] = depth.projdim_quotient;
  report.body()["cohen_macaulay"] = cm.cohen_macaulay;
  report.body()["cm_case"] = to_string(cm.matched);
  for (const auto& note : cls.notes) report.warn(note);
  for (const auto& note : depth.notes) report.warn(note);
  for (const auto& note : cm.notes) report.warn(note);
  std::ostringstream pretty;
  pretty << "L(" << seg.u.str() << ", " << seg.v.str() << ") has " << seg.gens.size()
         << " generators\n"
         << "completely: " << (cls.completely ? "yes" : "no") << " ["
         << to_string(cls.completely_tag) << "]\n"
         << "linear resolution: " << (cls.linear_resolution ? "yes" : "no") << " ["
         << to_string(cls.linres_tag) << "]\n"
         << "dim S/I = " << dim.dim << ", depth S/I = " << depth.depth
         << ", Cohen-Macaulay: " << (cm.cohen_macaulay ? "yes" : "no") << " ["
         << to_string(cm.matched) << "]\n";
  return report.emit(opt, exit_ok, pretty.str());
}

int cmd_lexsegment_order(const Options& opt, int n, int d, const std::string& u,
                         const std::string& v) {
  auto seg = segment_from_flags(n, d, u, v);
  Report report("lexsegment order", u + "|" + v);
  auto cls = classify(seg);
  if (!cls.linear_resolution) {
    report.body()["linear_resolution"] = false;
    return report.emit(opt, exit_negative, "no linear resolution: no quotient order\n");
  }
  auto cert = quotient_order(seg);
  report.body()["certificate"] = to_json(cert);
  std::ostringstream pretty;
  pretty << "order:";
  for (const auto& g : cert.order) pretty << ' ' << g.str();
  pretty << "\n";
  return report.emit(opt, exit_ok, pretty.str());
}

int cmd_lexsegment_resolution(const Options& opt, int n, int d, const std::string& u,
                              const std::string& v) {
  auto seg = segment_from_flags(n, d, u, v);
  Report report("lexsegment resolution", u + "|" + v);
  auto cls = classify(seg);
  if (!cls.linear_resolution) {
    report.body()["linear_resolution"] = false;
    return report.emit(opt, exit_negative, "no linear resolution\n");
  }
  auto cert = quotient_order(seg);
  DecompositionFunction g(cert);
  auto reg = g.regularity();
  if (!reg.regular) {
    report.body()["regular_decomposition"] = false;
    report.warn("decomposition function is not regular; no explicit resolution");
    return report.emit(opt, exit_negative, "decomposition function is not regular\n");
  }
  auto res = mapping_cone_resolution(cert);
  report.body()["resolution"] = to_json(res);
  return report.emit(opt, exit_ok, resolution_pretty(res));
}

// ----------------------------------------------------------- resolution ---

int cmd_resolution_koszul(const Options& opt, int n, const std::string& seq_csv) {
  std::vector<Monomial> seq;
  std::istringstream in(seq_csv);
  std::string tok;
  while (std::getline(in, tok, ',')) seq.push_back(Monomial::parse(n, tok));
  Report report("resolution koszul", seq_csv);
  auto res = koszul(n, seq);
  auto check = verify_complex(res);
  report.body()["resolution"] = to_json(res);
  report.body()["dd_zero"] = check.dd_zero;
  return report.emit(opt, exit_ok, resolution_pretty(res));
}

int cmd_resolution_ek(const Options& opt, const std::string& in) {
  auto ideal = load_ideal(in);
  Report report("resolution ek", to_json(ideal).dump());
  auto res = ek_resolution(ideal);
  auto check = verify_complex(res);
  report.body()["resolution"] = to_json(res);
  report.body()["dd_zero"] = check.dd_zero;
  report.body()["minimal"] = check.minimal;
  report.body()["betti"] = to_json(check.betti_of_ideal);
  return report.emit(opt, exit_ok, resolution_pretty(res));
}

int cmd_resolution_cone(const Options& opt, const std::string& in, const std::string& order_csv) {
  auto ideal = load_ideal(in);
  Report report("resolution cone", to_json(ideal).dump());
  QuotientCertificate cert{ideal, {}, {}};
  if (!order_csv.empty()) {
    std::vector<Monomial> order;
    std::istringstream s(order_csv);
    std::string tok;
    while (std::getline(s, tok, ',')) order.push_back(Monomial::parse(ideal.vars(), tok));
    auto res = check_order(ideal, order);
    auto* c = std::get_if<QuotientCertificate>(&res);
    require(c != nullptr, errc::invalid_input, "given order does not have linear quotients");
    cert = *c;
  } else {
    auto found = find_order(ideal, opt.budget);
    if (found.status != SearchStatus::found) {
      report.body()["status"] = found.status == SearchStatus::none ? "none" : "unknown";
      return report.emit(opt, found.status == SearchStatus::none ? exit_negative : exit_unknown,
                         "no linear quotients order available\n");
    }
    cert = *found.certificate;
  }
  auto res = mapping_cone_resolution(cert);
  auto check = verify_complex(res);
  report.body()["resolution"] = to_json(res);
  report.body()["dd_zero"] = check.dd_zero;
  report.body()["minimal"] = check.minimal;
  report.body()["betti"] = to_json(check.betti_of_ideal);
  return report.emit(opt, exit_ok, resolution_pretty(res));
}

int cmd_resolution_verify(const Options& opt, const std::string& in) {
  Json j = load_json_file(in);
  Report report("resolution verify", j.dump());
  // rebuild a resolution from the sparse JSON form
  GradedFreeResolution res;
  res.n = j.at("n").get<int>();
  res.target = j.at("target").get<std::string>() == "ideal"
                   ? GradedFreeResolution::Target::ideal
                   : GradedFreeResolution::Target::quotient;
  for (const auto& stage : j.at("modules")) {
    std::vector<BasisLabel> labels;
    for (const auto& b : stage)
      labels.push_back(BasisLabel{b.at("sigma").get<std::vector<int>>(),
                                  Monomial::parse(res.n, b.at("gen").get<std::string>()),
                                  b.at("degree").get<int>()});
    res.modules.push_back(std::move(labels));
  }
  auto matrix_from = [&](const Json& mj) {
    ResolutionMatrix m;
    m.rows = mj.at("rows").get<int>();
    m.cols = mj.at("cols").get<int>();
    for (const auto& e : mj.at("entries"))
      m.entries.push_back({e.at("row").get<int>(), e.at("col").get<int>(),
                           e.at("sign").get<int>(),
                           Monomial::parse(res.n, e.at("monomial").get<std::string>())});
    return m;
  };
  for (const auto& d : j.at("diffs")) res.diffs.push_back(matrix_from(d));
  if (j.contains("augmentation")) res.augmentation = matrix_from(j["augmentation"]);
  auto check = verify_complex(res);
  report.body()["dd_zero"] = check.dd_zero;
  report.body()["minimal"] = check.minimal;
  report.body()["betti"] = to_json(check.betti_of_ideal);
  std::ostringstream pretty;
  pretty << "dd_zero: " << (check.dd_zero ? "yes" : "no")
         << ", minimal: " << (check.minimal ? "yes" : "no") << "\n"
         << check.betti_of_ideal.grid();
  return report.emit(opt, check.dd_zero ? exit_ok : exit_negative, pretty.str());
}

// -------------------------------------------------------------- complex ---

int cmd_complex_analyze(const Options& opt, const std::string& in) {
  auto complex = load_complex(in);
  Report report("complex analyze", to_json(complex).dump());
  report.body()["complex"] = to_json(complex);
  report.body()["pure"] = complex.pure();
  if (!complex.is_void()) report.body()["dim"] = complex.dim();
  if (!complex.covers_all_vertices())
    report.warn("some vertices lie in no facet");
  auto sr = sr_ideal(complex);
  if (sr.full_simplex) {
    report.warn("full simplex: the Stanley-Reisner ideal is zero");
  } else {
    report.body()["sr_ideal"] = to_json(*sr.ideal);
    report.body()["dim_sr_ring"] = krull_dim(*sr.ideal);
  }
  if (!complex.is_irrelevant()) report.body()["facet_ideal"] = to_json(facet_ideal(complex));
  if (!complex.is_full_simplex()) {
    report.body()["dual_sr_ideal"] = to_json(dual_sr_ideal(complex));
    report.body()["alexander_dual"] = to_json(alexander_dual(complex));
  }
  auto profile = homology(complex, opt.field());
  report.body()["reduced_homology"] = profile.reduced_betti;
  report.body()["cohen_macaulay"] = complex_is_cm(complex, opt.field());
  if (complex.pure()) {
    auto shelling = is_shellable(complex, opt.budget);
    report.body()["shellable"] = shelling.status == SearchStatus::found
                                     ? "yes"
                                     : (shelling.status == SearchStatus::none ? "no" : "unknown");
    if (shelling.status == SearchStatus::found) report.body()["shelling"] = shelling.order;
    report.body()["vertex_decomposable"] = is_vertex_decomposable(complex);
    if (complex.vertices() <= 8)
      report.body()["shifted"] = is_shifted(complex).shifted;
    else
      report.warn("shiftedness search skipped (n > 8)");
    auto er = eagon_reiner_check(complex, opt.field());
    Json erj;
    erj["cm_over_field"] = er.cm_over_field;
    erj["dual_linear"] = er.dual_linear;
    erj["agree"] = er.agree;
    erj["projdim_sr_ideal"] = er.projdim_sr_ideal;
    erj["reg_dual_ring"] = er.reg_dual_ring;
    erj["terai_equal"] = er.terai_equal;
    report.body()["eagon_reiner"] = std::move(erj);
  }
  std::ostringstream pretty;
  pretty << "complex on [" << complex.vertices() << "] with " << complex.facet_count()
         << " facets\n"
         << report.body().dump(2) << "\n";
  return report.emit(opt, exit_ok, pretty.str());
}

int cmd_complex_dual(const Options& opt, const std::string& in) {
  auto complex = load_complex(in);
  Report report("complex dual", to_json(complex).dump());
  auto dual = alexander_dual(complex);
  report.body()["alexander_dual"] = to_json(dual);
  report.body()["dual_sr_ideal"] = to_json(dual_sr_ideal(complex));
  report.body()["involution_ok"] = alexander_dual(dual) == complex;
  return report.emit(opt, exit_ok, report.body().dump(2) + "\n");
}

int cmd_complex_shelling(const Options& opt, const std::string& in) {
  auto complex = load_complex(in);
  Report report("complex shelling", to_json(complex).dump());
  auto shelling = is_shellable(complex, opt.budget);
  if (shelling.status == SearchStatus::found) {
    report.body()["shelling"] = shelling.order;
    Json facets = Json::array();
    auto fl = complex.facets();
    for (int idx : shelling.order) facets.push_back(fl[static_cast<std::size_t>(idx)]);
    report.body()["shelling_facets"] = std::move(facets);
    return report.emit(opt, exit_ok, "shellable\n" + report.body().dump(2) + "\n");
  }
  report.body()["status"] = shelling.status == SearchStatus::none ? "not shellable" : "unknown";
  return report.emit(opt, shelling.status == SearchStatus::none ? exit_negative : exit_unknown,
                     report.body().dump(2) + "\n");
}

int cmd_complex_cm(const Options& opt, const std::string& in) {
  auto complex = load_complex(in);
  Report report("complex cm", to_json(complex).dump());
  bool cm = complex_is_cm(complex, opt.field());
  report.body()["field_characteristic"] = opt.characteristic;
  report.body()["cohen_macaulay"] = cm;
  return report.emit(opt, cm ? exit_ok : exit_negative,
                     cm ? "Cohen-Macaulay\n" : "not Cohen-Macaulay\n");
}

// -------------------------------------------------------- constructible ---

int cmd_constructible_verify(const Options& opt, const std::string& in,
                             const std::string& cert_path) {
  auto ideal = load_ideal(in);
  Json cj = load_json_file(cert_path);
  Report report("constructible verify", to_json(ideal).dump() + cj.dump());
  auto cert = certificate_from_json(ideal.vars(), cj);
  auto check = verify_certificate(ideal, cert);
  report.body()["valid"] = check.valid;
  if (!check.valid) {
    report.body()["failing_node"] = check.failing_node;
    report.body()["reason"] = check.reason;
    return report.emit(opt, exit_negative,
                       "invalid at " + check.failing_node + ": " + check.reason + "\n");
  }
  report.body()["betti"] = to_json(constructible_betti(ideal, cert));
  return report.emit(opt, exit_ok, "certificate valid\n");
}

int cmd_constructible_search(const Options& opt, const std::string& in) {
  auto ideal = load_ideal(in);
  Report report("constructible search", to_json(ideal).dump());
  auto result = search_constructible(ideal, opt.budget);
  switch (result.status) {
    case Constructibility::found: {
      report.body()["status"] = "constructible";
      report.body()["certificate"] = certificate_to_json(*result.certificate);
      report.body()["betti"] = to_json(constructible_betti(ideal, *result.certificate));
      return report.emit(opt, exit_ok, "constructible\n");
    }
    case Constructibility::not_constructible:
      report.body()["status"] = "not constructible";
      return report.emit(opt, exit_negative, "not constructible\n");
    case Constructibility::unknown:
      report.body()["status"] = "unknown";
      return report.emit(opt, exit_unknown, "unknown (budget exhausted)\n");
  }
  return exit_invariant;
}

int cmd_constructible_polarize(const Options& opt, const std::string& in) {
  auto ideal = load_ideal(in);
  Report report("constructible polarize", to_json(ideal).dump());
  auto p = polarize(ideal);
  report.body()["polarized"] = to_json(p.ideal);
  Json map = Json::array();
  for (const auto& [i, j, target] : p.variable_map)
    map.push_back(Json{{"variable", i}, {"copy", j}, {"target", target}});
  report.body()["variable_map"] = std::move(map);
  return report.emit(opt, exit_ok, ideal_pretty(p.ideal) + "\n");
}

// -------------------------------------------------------------- subword ---

int cmd_subword_analyze(const Options& opt, int m, const std::string& word_csv,
                        const std::string& pi_text) {
  CoxeterWord word{m, parse_letters(word_csv)};
  auto pi = parse_pi(m, pi_text);
  Report report("subword analyze", word_csv + "|" + pi_text);
  auto rep = subword_complex(word, pi);
  report.body() = to_json(rep);
  if (rep.empty_complex) {
    report.warn("word does not contain the element; empty complex");
    return report.emit(opt, exit_negative, "word does not contain the element\n");
  }
  auto bounds = bounds_report(rep);
  Json bj;
  bj["projdim_dual"] = bounds.projdim_dual;
  bj["projdim_dual_bound"] = bounds.projdim_dual_bound;
  bj["projdim_sr_ring"] = bounds.projdim_sr_ring;
  bj["reg_sr_bound"] = bounds.reg_sr_bound;
  report.body()["bounds"] = std::move(bj);
  auto sc = special_class_analysis(rep);
  if (sc) {
    Json sj;
    sj["r"] = sc->r;
    if (sc->unique_l) sj["unique_l"] = *sc->unique_l;
    sj["betti"] = to_json(sc->betti);
    sj["k_polynomial"] = to_json(sc->k_polynomial);
    sj["sphere"] = sc->sphere;
    sj["height_dual"] = sc->height_dual;
    Json ci = Json::array();
    for (const auto& g : sc->sr_complete_intersection) ci.push_back(g.str());
    sj["sr_complete_intersection"] = std::move(ci);
    report.body()["special_class"] = std::move(sj);
  } else {
    report.body()["special_class"] = nullptr;
  }
  report.body()["verdict"] =
      sphere_or_ball(word, pi) == SphereVerdict::sphere ? "sphere" : "ball";
  return report.emit(opt, exit_ok, report.body().dump(2) + "\n");
}

int cmd_subword_kpoly(const Options& opt, int m, const std::string& word_csv,
                      const std::string& pi_text) {
  CoxeterWord word{m, parse_letters(word_csv)};
  auto pi = parse_pi(m, pi_text);
  Report report("subword kpoly", word_csv + "|" + pi_text);
  auto p = kpolynomial_brute_force(word, pi);
  report.body()["k_polynomial"] = to_json(p);
  auto rep = subword_complex(word, pi);
  if (!rep.empty_complex) {
    auto sc = special_class_analysis(rep);
    if (sc) {
      report.body()["closed_form"] = to_json(sc->k_polynomial);
      report.body()["closed_form_matches"] = sc->k_polynomial == p;
    }
  }
  return report.emit(opt, exit_ok, p.str() + "\n");
}

int cmd_subword_sphere(const Options& opt, int m, const std::string& word_csv,
                       const std::string& pi_text) {
  CoxeterWord word{m, parse_letters(word_csv)};
  auto pi = parse_pi(m, pi_text);
  Report report("subword sphere", word_csv + "|" + pi_text);
  auto verdict = sphere_or_ball(word, pi);
  report.body()["verdict"] = verdict == SphereVerdict::sphere ? "sphere" : "ball";
  if (word.size() == pi.length())
    report.warn("the complex is {?}; reported as the (-1)-sphere");
  return report.emit(opt, verdict == SphereVerdict::sphere ? exit_ok : exit_negative,
                     verdict == SphereVerdict::sphere ? "sphere\n" : "ball\n");
}

// ---------------------------------------------------------------- sweep ---

int emit_sweep(const Options& opt, Report& report, const SweepReport& sweep) {
  report.body()["instances"] = sweep.instances;
  report.body()["checked"] = sweep.checked;
  report.body()["failures"] = sweep.failures;
  std::ostringstream pretty;
  pretty << sweep.instances << " instances, " << sweep.checked << " checks, "
         << sweep.failures.size() << " failures\n";
  for (const auto& f : sweep.failures) pretty << "  " << f << "\n";
  return report.emit(opt, sweep.ok() ? exit_ok : exit_invariant, pretty.str());
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"monomial ideals, linear quotients and subword complexes"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format: pretty or json")
      ->check(CLI::IsMember({"pretty", "json"}));
  app.add_flag("--json", opt.json_flag, "shorthand for --format json");
  app.add_option("--char", opt.characteristic,
                 "coefficient field characteristic (0 = rationals)");
  app.add_option("--seed", opt.seed, "seed for randomized sweeps");
  app.add_option("--budget", opt.budget, "node budget for searches");
  app.add_option("--threads", opt.threads, "worker threads for sweeps")
      ->check(CLI::Range(1, 64));

  // ideal
  auto* ideal = app.add_subcommand("ideal", "monomial ideal algebra and the Betti oracle");
  std::string in_path, in2_path, by_text, order_csv;
  int taylor_budget = 16;
  auto* ib = ideal->add_subcommand("betti", "brute-force Betti table");
  ib->add_option("--in", in_path, "ideal JSON file")->required();
  ib->add_option("--taylor-budget", taylor_budget, "generator cap for the subset route");
  auto* iq = ideal->add_subcommand("quotients", "find or check a linear quotients order");
  iq->add_option("--in", in_path)->required();
  iq->add_option("--order", order_csv, "comma-separated order to check");
  auto* is = ideal->add_subcommand("stable", "stability test");
  is->add_option("--in", in_path)->required();
  auto* ii = ideal->add_subcommand("intersect", "intersection of two ideals");
  ii->add_option("--in", in_path)->required();
  ii->add_option("--in2", in2_path)->required();
  auto* ic = ideal->add_subcommand("colon", "colon by a monomial");
  ic->add_option("--in", in_path)->required();
  ic->add_option("--by", by_text)->required();
  auto* id = ideal->add_subcommand("dim-depth", "radical, primes, dimension and depth");
  id->add_option("--in", in_path)->required();

  // lexsegment
  auto* lex = app.add_subcommand("lexsegment", "lexsegment classification and invariants");
  int ln = 0, ld = 0;
  std::string lu, lv;
  for (auto* sub : {lex->add_subcommand("classify", "full classification report"),
                    lex->add_subcommand("order", "linear quotients order"),
                    lex->add_subcommand("resolution", "explicit mapping-cone resolution")}) {
    sub->add_option("--n", ln, "variable count")->required();
    sub->add_option("--d", ld, "degree")->required();
    sub->add_option("--u", lu, "upper end")->required();
    sub->add_option("--v", lv, "lower end")->required();
  }

  // resolution
  auto* res = app.add_subcommand("resolution", "explicit complexes and verification");
  int rn = 0;
  std::string seq_csv;
  auto* rk = res->add_subcommand("koszul", "Koszul complex of a monomial sequence");
  rk->add_option("--n", rn)->required();
  rk->add_option("--seq", seq_csv, "comma-separated monomials")->required();
  auto* re = res->add_subcommand("ek", "Eliahou-Kervaire resolution of a stable ideal");
  re->add_option("--in", in_path)->required();
  auto* rc = res->add_subcommand("cone", "iterated mapping-cone resolution");
  rc->add_option("--in", in_path)->required();
  rc->add_option("--order", order_csv, "optional explicit order");
  auto* rv = res->add_subcommand("verify", "check a serialized resolution");
  rv->add_option("--in", in_path)->required();

  // complex
  auto* cpx = app.add_subcommand("complex", "simplicial complexes");
  auto* ca = cpx->add_subcommand("analyze", "full report");
  ca->add_option("--in", in_path)->required();
  auto* cd = cpx->add_subcommand("dual", "Alexander dual");
  cd->add_option("--in", in_path)->required();
  auto* cs = cpx->add_subcommand("shelling", "shelling order via the dual ideal");
  cs->add_option("--in", in_path)->required();
  auto* cc = cpx->add_subcommand("cm", "Reisner Cohen-Macaulay test");
  cc->add_option("--in", in_path)->required();

  // constructible
  auto* cons = app.add_subcommand("constructible", "constructible ideals");
  std::string cert_path;
  auto* cv = cons->add_subcommand("verify", "verify a certificate tree");
  cv->add_option("--in", in_path)->required();
  cv->add_option("--cert", cert_path)->required();
  auto* cse = cons->add_subcommand("search", "certify or refute constructibility");
  cse->add_option("--in", in_path)->required();
  auto* cp = cons->add_subcommand("polarize", "square-free polarization");
  cp->add_option("--in", in_path)->required();

  // subword
  auto* sub = app.add_subcommand("subword", "subword complexes in symmetric groups");
  int sm = 0;
  std::string word_csv, pi_text;
  for (auto* s : {sub->add_subcommand("analyze", "facets, quotients, bounds, special class"),
                  sub->add_subcommand("kpoly", "K-polynomial by Demazure enumeration"),
                  sub->add_subcommand("sphere", "sphere-or-ball verdict")}) {
    s->add_option("--m", sm, "symmetric group size")->required();
    s->add_option("--word", word_csv, "comma-separated letters")->required();
    s->add_option("--pi", pi_text, "cycle:(1 2 4) or oneline:2,4,3,1")->required();
  }

  // sweep
  auto* sweep = app.add_subcommand("sweep", "property sweeps");
  int snmax = 4, sdmax = 3, scount = 300, sgens = 6, sn = 6;
  auto* sh = sweep->add_subcommand("hierarchy", "shifted => vd => shellable => CM");
  sh->add_option("--nmax", snmax, "exhaustive families up to this n (capped at 5)");
  sh->add_option("--count", scount, "random complexes at n = 6");
  auto* sl = sweep->add_subcommand("lexsegment", "formulas against the oracle");
  sl->add_option("--nmax", snmax);
  sl->add_option("--dmax", sdmax);
  auto* se = sweep->add_subcommand("eagon-reiner", "Eagon-Reiner and Terai on random complexes");
  se->add_option("--n", sn);
  se->add_option("--count", scount);
  auto* sq = sweep->add_subcommand("quotients", "Betti formula against the oracle");
  sq->add_option("--nmax", snmax);
  sq->add_option("--dmax", sdmax);
  sq->add_option("--max-gens", sgens);

  // global flags may appear after the subcommand
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* node) {
    node->fallthrough();
    for (auto* child : node->get_subcommands(nullptr)) allow_fallthrough(child);
  };
  allow_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  try {
    if (ib->parsed()) return cmd_ideal_betti(opt, in_path, taylor_budget);
    if (iq->parsed()) return cmd_ideal_quotients(opt, in_path, order_csv);
    if (is->parsed()) return cmd_ideal_stable(opt, in_path);
    if (ii->parsed()) return cmd_ideal_intersect(opt, in_path, in2_path);
    if (ic->parsed()) return cmd_ideal_colon(opt, in_path, by_text);
    if (id->parsed()) return cmd_ideal_dim_depth(opt, in_path);
    if (lex->parsed()) {
      auto subs = lex->get_subcommands();
      require(!subs.empty(), errc::invalid_input, "missing lexsegment subcommand");
      std::string name = subs.front()->get_name();
      if (name == "classify") return cmd_lexsegment_classify(opt, ln, ld, lu, lv);
      if (name == "order") return cmd_lexsegment_order(opt, ln, ld, lu, lv);
      return cmd_lexsegment_resolution(opt, ln, ld, lu, lv);
    }
    if (rk->parsed()) return cmd_resolution_koszul(opt, rn, seq_csv);
    if (re->parsed()) return cmd_resolution_ek(opt, in_path);
    if (rc->parsed()) return cmd_resolution_cone(opt, in_path, order_csv);
    if (rv->parsed()) return cmd_resolution_verify(opt, in_path);
    if (ca->parsed()) return cmd_complex_analyze(opt, in_path);
    if (cd->parsed()) return cmd_complex_dual(opt, in_path);
    if (cs->parsed()) return cmd_complex_shelling(opt, in_path);
    if (cc->parsed()) return cmd_complex_cm(opt, in_path);
    if (cv->parsed()) return cmd_constructible_verify(opt, in_path, cert_path);
    if (cse->parsed()) return cmd_constructible_search(opt, in_path);
    if (cp->parsed()) return cmd_constructible_polarize(opt, in_path);
    if (sub->parsed()) {
      auto subs = sub->get_subcommands();
      require(!subs.empty(), errc::invalid_input, "missing subword subcommand");
      std::string name = subs.front()->get_name();
      if (name == "analyze") return cmd_subword_analyze(opt, sm, word_csv, pi_text);
      if (name == "kpoly") return cmd_subword_kpoly(opt, sm, word_csv, pi_text);
      return cmd_subword_sphere(opt, sm, word_csv, pi_text);
    }
    if (sweep->parsed()) {
      auto subs = sweep->get_subcommands();
      require(!subs.empty(), errc::invalid_input, "missing sweep subcommand");
      std::string name = subs.front()->get_name();
      FieldSpec field = opt.field();
      if (name == "hierarchy") {
        Report report("sweep hierarchy", std::to_string(snmax) + "," + std::to_string(scount));
        return emit_sweep(opt, report, sweep_hierarchy(std::max(snmax, 6), scount, opt.seed,
                                                       opt.threads));
      }
      if (name == "lexsegment") {
        Report report("sweep lexsegment", std::to_string(snmax) + "," + std::to_string(sdmax));
        return emit_sweep(opt, report, sweep_lexsegment(snmax, sdmax, field, opt.threads));
      }
      if (name == "eagon-reiner") {
        Report report("sweep eagon-reiner", std::to_string(sn) + "," + std::to_string(scount));
        return emit_sweep(opt, report, sweep_eagon_reiner(sn, scount, opt.seed, field,
                                                          opt.threads));
      }
      Report report("sweep quotients", std::to_string(snmax) + "," + std::to_string(sdmax));
      return emit_sweep(opt, report,
                        sweep_quotient_betti(snmax, sdmax, sgens, field, opt.threads));
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case errc::out_of_budget:
        return exit_unknown;
      case errc::invariant_violation:
        return exit_invariant;
      default:
        return exit_input;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  std::cerr << "error: no subcommand\n";
  return exit_input;
}
