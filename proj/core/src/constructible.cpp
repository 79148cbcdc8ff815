#include "linquo/constructible.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

namespace linquo {

MonomialIdeal certificate_ideal(int n, const ConstructibilityCertificate::NodePtr& node) {
  require(node != nullptr, errc::invalid_input, "empty certificate node");
  if (node->is_leaf()) return MonomialIdeal::from_generators(n, {*node->leaf});
  return sum(certificate_ideal(n, node->left), certificate_ideal(n, node->right));
}

namespace {

bool verify_node(int n, const ConstructibilityCertificate::NodePtr& node,
                 const std::string& path, CertificateVerification& out) {
  if (!node) {
    out.failing_node = path;
    out.reason = "missing node";
    return false;
  }
  if (node->is_leaf()) return true;
  if (!node->left || !node->right || !node->intersection) {
    out.failing_node = path;
    out.reason = "split node missing a child";
    return false;
  }
  if (!verify_node(n, node->left, path + ".left", out)) return false;
  if (!verify_node(n, node->right, path + ".right", out)) return false;
  if (!verify_node(n, node->intersection, path + ".intersection", out)) return false;

  MonomialIdeal i1 = certificate_ideal(n, node->left);
  MonomialIdeal i2 = certificate_ideal(n, node->right);
  MonomialIdeal whole = sum(i1, i2);
  auto q1 = i1.generated_in_one_degree();
  auto q2 = i2.generated_in_one_degree();
  if (!q1 || !q2 || *q1 != *q2) {
    out.failing_node = path;
    out.reason = "split parts are not equigenerated in a common degree";
    return false;
  }
  if (i1 == whole || i2 == whole) {
    out.failing_node = path;
    out.reason = "split is not strict";
    return false;
  }
  MonomialIdeal inter = intersect(i1, i2);
  MonomialIdeal recorded = certificate_ideal(n, node->intersection);
  if (inter != recorded) {
    out.failing_node = path;
    out.reason = "recorded intersection does not match the computed one";
    return false;
  }
  auto qi = inter.generated_in_one_degree();
  if (!qi || *qi != *q1 + 1) {
    out.failing_node = path;
    out.reason = "intersection is not equigenerated in degree q+1";
    return false;
  }
  return true;
}

} // namespace

CertificateVerification verify_certificate(const MonomialIdeal& ideal,
                                           const ConstructibilityCertificate& certificate) {
  CertificateVerification result;
  require(certificate.n == ideal.vars(), errc::dimension_mismatch,
          "certificate in the wrong ambient ring");
  if (!verify_node(ideal.vars(), certificate.root, "root", result)) return result;
  MonomialIdeal built = certificate_ideal(ideal.vars(), certificate.root);
  if (built != ideal) {
    result.failing_node = "root";
    result.reason = "certificate generates a different ideal";
    return result;
  }
  result.valid = true;
  return result;
}

namespace {

using Node = ConstructibilityCertificate::Node;
using NodePtr = ConstructibilityCertificate::NodePtr;

/// Certificate for base * (x_{v_1}, ..., x_{v_k}): peel the last variable;
/// the intersection is (base * x_{v_k}) * (x_{v_1}, ..., x_{v_{k-1}}).
NodePtr certificate_for_variable_multiples(const Monomial& base,
                                           const std::vector<int>& vars) {
  require(!vars.empty(), errc::invariant_violation, "empty variable list");
  if (vars.size() == 1)
    return ConstructibilityCertificate::make_leaf(base.times_variable(vars[0]));
  std::vector<int> head(vars.begin(), vars.end() - 1);
  int last = vars.back();
  NodePtr left = certificate_for_variable_multiples(base, head);
  NodePtr right = ConstructibilityCertificate::make_leaf(base.times_variable(last));
  NodePtr inter = certificate_for_variable_multiples(base.times_variable(last), head);
  return ConstructibilityCertificate::make_split(left, right, inter);
}

/// Certificate for an ideal with linear quotients: peel the last generator
/// of the given order; the intersection is u_r times the colon variables.
NodePtr certificate_from_quotients(const QuotientCertificate& cert) {
  const auto& order = cert.order;
  NodePtr acc = ConstructibilityCertificate::make_leaf(order[0]);
  for (std::size_t r = 1; r < order.size(); ++r) {
    NodePtr right = ConstructibilityCertificate::make_leaf(order[r]);
    NodePtr inter = certificate_for_variable_multiples(order[r], cert.sets[r]);
    acc = ConstructibilityCertificate::make_split(acc, right, inter);
  }
  return acc;
}

struct SearchContext {
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  int exhaustive_cap;
  bool budget_hit = false;
  std::unordered_map<std::string, std::pair<Constructibility, NodePtr>> memo;

  static std::string key_of(const MonomialIdeal& ideal) {
    std::ostringstream out;
    for (const auto& g : ideal.gens()) out << g.str() << '|';
    return out.str();
  }

  std::pair<Constructibility, NodePtr> search(const MonomialIdeal& ideal) {
    if (ideal.size() == 1)
      return {Constructibility::found,
              ConstructibilityCertificate::make_leaf(ideal.gens()[0])};
    auto degree = ideal.generated_in_one_degree();
    if (!degree) return {Constructibility::not_constructible, nullptr};

    std::string key = key_of(ideal);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    if (++nodes > budget) {
      budget_hit = true;
      return {Constructibility::unknown, nullptr};
    }

    // fast path: linear quotients give a certificate directly; its search
    // nodes count against the shared budget
    std::uint64_t remaining = budget > nodes ? budget - nodes : 0;
    auto fo = find_order(ideal, std::min<std::uint64_t>(remaining, 100000));
    nodes += fo.nodes_used;
    if (fo.status == SearchStatus::found) {
      auto node = certificate_from_quotients(*fo.certificate);
      memo[key] = {Constructibility::found, node};
      return memo[key];
    }
    if (nodes > budget) {
      budget_hit = true;
      return {Constructibility::unknown, nullptr};
    }

    const int r = static_cast<int>(ideal.size());
    bool exhaustive = r <= exhaustive_cap;
    Constructibility verdict =
        exhaustive ? Constructibility::not_constructible : Constructibility::unknown;
    if (r <= 20) {
      const std::uint32_t full = (1u << r) - 1;
      // unordered partitions: generator 0 stays on the left
      for (std::uint32_t left = 1; left <= full; left += 2) {
        std::uint32_t right = full & ~left;
        if (right == 0) continue;
        if (++nodes > budget) {
          budget_hit = true;
          break;
        }
        std::vector<Monomial> g1, g2;
        for (int b = 0; b < r; ++b)
          (left >> b & 1 ? g1 : g2).push_back(ideal.gens()[static_cast<std::size_t>(b)]);
        auto i1 = MonomialIdeal::from_generators(ideal.vars(), g1);
        auto i2 = MonomialIdeal::from_generators(ideal.vars(), g2);
        auto inter = intersect(i1, i2);
        auto qi = inter.generated_in_one_degree();
        if (!qi || *qi != *degree + 1) continue;
        auto [s1, c1] = search(i1);
        if (s1 == Constructibility::unknown) verdict = Constructibility::unknown;
        if (s1 != Constructibility::found) continue;
        auto [s2, c2] = search(i2);
        if (s2 == Constructibility::unknown) verdict = Constructibility::unknown;
        if (s2 != Constructibility::found) continue;
        auto [si, ci] = search(inter);
        if (si == Constructibility::unknown) verdict = Constructibility::unknown;
        if (si != Constructibility::found) continue;
        auto node = ConstructibilityCertificate::make_split(c1, c2, ci);
        memo[key] = {Constructibility::found, node};
        return memo[key];
      }
    } else {
      verdict = Constructibility::unknown;
    }
    if (budget_hit) verdict = Constructibility::unknown;
    auto result = std::pair<Constructibility, NodePtr>{verdict, nullptr};
    if (verdict == Constructibility::not_constructible) memo[key] = result;
    return result;
  }
};

} // namespace

ConstructibleSearchResult search_constructible(const MonomialIdeal& ideal,
                                               std::uint64_t budget, int exhaustive_gen_cap) {
  require(ideal.generated_in_one_degree().has_value(), errc::unsupported,
          "constructibility search needs an equigenerated ideal");
  SearchContext ctx{budget, 0, exhaustive_gen_cap, false, {}};
  auto [status, node] = ctx.search(ideal);
  ConstructibleSearchResult result;
  result.status = status;
  result.nodes_used = ctx.nodes;
  if (node) {
    result.certificate = ConstructibilityCertificate{ideal.vars(), node};
    auto check = verify_certificate(ideal, *result.certificate);
    require(check.valid, errc::invariant_violation,
            "search produced an invalid certificate: " + check.reason);
  }
  return result;
}

namespace {

BettiTable betti_rec(int n, const ConstructibilityCertificate::NodePtr& node) {
  BettiTable t;
  if (node->is_leaf()) {
    t.add(0, node->leaf->degree(), 1);
    return t;
  }
  BettiTable t1 = betti_rec(n, node->left);
  BettiTable t2 = betti_rec(n, node->right);
  BettiTable ti = betti_rec(n, node->intersection);
  for (const auto& [key, value] : t1.entries()) t.add(key.first, key.second, value);
  for (const auto& [key, value] : t2.entries()) t.add(key.first, key.second, value);
  for (const auto& [key, value] : ti.entries()) t.add(key.first + 1, key.second, value);
  return t;
}

} // namespace

BettiTable constructible_betti(const MonomialIdeal& ideal,
                               const ConstructibilityCertificate& certificate) {
  auto check = verify_certificate(ideal, certificate);
  require(check.valid, errc::invalid_input,
          "invalid certificate at " + check.failing_node + ": " + check.reason);
  return betti_rec(ideal.vars(), certificate.root);
}

Polarization polarize(const MonomialIdeal& ideal) {
  const int n = ideal.vars();
  std::vector<int> max_exp(static_cast<std::size_t>(n), 0);
  for (const auto& g : ideal.gens())
    for (int i = 1; i <= n; ++i)
      max_exp[static_cast<std::size_t>(i - 1)] =
          std::max(max_exp[static_cast<std::size_t>(i - 1)], g.exponent(i));

  std::vector<std::tuple<int, int, int>> variable_map;
  int next = n + 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= std::max(max_exp[static_cast<std::size_t>(i - 1)], 1); ++j) {
      int target = j == 1 ? i : next++;
      variable_map.emplace_back(i, j, target);
    }
  }
  const int nn = next - 1;

  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    std::vector<int> e(static_cast<std::size_t>(nn), 0);
    for (const auto& [i, j, target] : variable_map)
      if (g.exponent(i) >= j) e[static_cast<std::size_t>(target - 1)] = 1;
    gens.emplace_back(std::move(e));
  }
  return Polarization{MonomialIdeal::from_generators(nn, std::move(gens)), n,
                      std::move(variable_map)};
}

Monomial polarize_monomial(const Monomial& m, const Polarization& p) {
  int nn = p.source_vars;
  for (const auto& [i, j, target] : p.variable_map) nn = std::max(nn, target);
  std::vector<int> e(static_cast<std::size_t>(nn), 0);
  for (const auto& [i, j, target] : p.variable_map)
    if (m.exponent(i) >= j) e[static_cast<std::size_t>(target - 1)] = 1;
  for (int i = 1; i <= p.source_vars; ++i) {
    int covered = 0;
    for (const auto& [vi, j, target] : p.variable_map)
      if (vi == i) covered = std::max(covered, j);
    require(m.exponent(i) <= covered, errc::invalid_input,
            "monomial exponent exceeds the polarization table");
  }
  return Monomial(std::move(e));
}

namespace {

struct FacetKeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto m : v) {
      h ^= m + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct ComplexSearch {
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  std::unordered_map<std::vector<std::uint32_t>, Constructibility, FacetKeyHash> memo;

  Constructibility search(const SimplicialComplex& complex) {
    if (!complex.pure()) return Constructibility::not_constructible;
    if (complex.is_simplex() || complex.is_irrelevant()) return Constructibility::found;
    if (complex.is_void()) return Constructibility::not_constructible;
    auto key = complex.facet_masks();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    if (++nodes > budget) {
      budget_hit = true;
      return Constructibility::unknown;
    }
    const int r = static_cast<int>(complex.facet_count());
    if (r > 20) return Constructibility::unknown;
    const int d = complex.dim();
    Constructibility verdict = Constructibility::not_constructible;
    const std::uint32_t full = (1u << r) - 1;
    for (std::uint32_t left = 1; left <= full; left += 2) {
      std::uint32_t right = full & ~left;
      if (right == 0) continue;
      std::vector<std::vector<int>> f1, f2;
      for (int b = 0; b < r; ++b) {
        auto face = mask_to_face(complex.facet_masks()[static_cast<std::size_t>(b)]);
        (left >> b & 1 ? f1 : f2).push_back(std::move(face));
      }
      auto d1 = SimplicialComplex::from_facets(complex.vertices(), f1);
      auto d2 = SimplicialComplex::from_facets(complex.vertices(), f2);
      auto inter = complex_intersection(d1, d2);
      if (inter.is_void()) continue;
      if (!inter.pure() || inter.dim() != d - 1) continue;
      auto s1 = search(d1);
      if (s1 == Constructibility::unknown) verdict = Constructibility::unknown;
      if (s1 != Constructibility::found) continue;
      auto s2 = search(d2);
      if (s2 == Constructibility::unknown) verdict = Constructibility::unknown;
      if (s2 != Constructibility::found) continue;
      auto si = search(inter);
      if (si == Constructibility::unknown) verdict = Constructibility::unknown;
      if (si != Constructibility::found) continue;
      memo[key] = Constructibility::found;
      return Constructibility::found;
    }
    if (budget_hit) verdict = Constructibility::unknown;
    if (verdict == Constructibility::not_constructible) memo[key] = verdict;
    return verdict;
  }
};

} // namespace

Constructibility complex_constructible(const SimplicialComplex& complex,
                                       std::uint64_t budget) {
  require(complex.pure(), errc::unsupported, "constructibility is defined for pure complexes");
  ComplexSearch ctx{budget, 0, false, {}};
  return ctx.search(complex);
}

} // namespace linquo
