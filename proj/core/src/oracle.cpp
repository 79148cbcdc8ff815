#include "linquo/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>
#include <vector>

namespace linquo {

namespace {

using Exponents = std::vector<int>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : e) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

Exponents lcm_exps(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

int total_degree(const Exponents& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

/// beta_{i,a}(S/I) via homology of the degree-a strand of the Taylor complex
/// tensored with k: basis in homological degree i are the i-subsets T of the
/// generators with lcm(T) = a, and the boundary keeps exactly the faces with
/// the same lcm.
void taylor_strands(const MonomialIdeal& ideal, FieldSpec field, std::uint64_t pivot_seed,
                    BettiTable& out) {
  const int r = static_cast<int>(ideal.size());
  require(r <= 20, errc::out_of_budget, "Taylor complex too large");
  const std::uint64_t full = (1ull << r) - 1;

  std::vector<Exponents> gen_exps;
  gen_exps.reserve(static_cast<std::size_t>(r));
  for (const auto& g : ideal.gens()) gen_exps.push_back(g.exponents());

  // lcm per subset, built from the lowest set bit.
  std::vector<Exponents> lcms(full + 1);
  lcms[0] = Exponents(static_cast<std::size_t>(ideal.vars()), 0);
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    int low = std::countr_zero(mask);
    std::uint64_t rest = mask & (mask - 1);
    lcms[mask] = rest == 0 ? gen_exps[static_cast<std::size_t>(low)]
                           : lcm_exps(lcms[rest], gen_exps[static_cast<std::size_t>(low)]);
  }

  std::unordered_map<Exponents, std::vector<std::uint64_t>, ExponentsHash> strands;
  for (std::uint64_t mask = 0; mask <= full; ++mask) strands[lcms[mask]].push_back(mask);

  for (auto& [mdeg, masks] : strands) {
    int maxcard = 0;
    for (auto m : masks) maxcard = std::max(maxcard, std::popcount(m));
    std::vector<std::vector<std::uint64_t>> layer(static_cast<std::size_t>(maxcard) + 1);
    for (auto m : masks) layer[static_cast<std::size_t>(std::popcount(m))].push_back(m);
    std::vector<std::unordered_map<std::uint64_t, int>> index(layer.size());
    for (std::size_t c = 0; c < layer.size(); ++c) {
      std::sort(layer[c].begin(), layer[c].end());
      for (std::size_t k = 0; k < layer[c].size(); ++k) index[c][layer[c][k]] = static_cast<int>(k);
    }

    std::vector<int> dims(layer.size());
    for (std::size_t c = 0; c < layer.size(); ++c) dims[c] = static_cast<int>(layer[c].size());
    std::vector<SparseIntMatrix> boundaries;
    for (std::size_t c = 1; c < layer.size(); ++c) {
      SparseIntMatrix m;
      m.rows = dims[c - 1];
      m.cols = dims[c];
      for (std::size_t k = 0; k < layer[c].size(); ++k) {
        std::uint64_t mask = layer[c][k];
        int sign = 1;
        for (int b = 0; b < r; ++b) {
          if (!(mask >> b & 1)) continue;
          std::uint64_t face = mask & ~(1ull << b);
          if (lcms[face] == mdeg) {
            auto it = index[c - 1].find(face);
            m.entries.push_back({it->second, static_cast<int>(k), sign});
          }
          sign = -sign;
        }
      }
      boundaries.push_back(std::move(m));
    }

    std::vector<int> ranks(layer.size() + 1, 0);
    for (std::size_t c = 1; c < layer.size(); ++c)
      ranks[c] = pivot_seed == 0 ? rank(boundaries[c - 1], field)
                                 : rank_with_pivot_seed(boundaries[c - 1], field, pivot_seed);
    const int j = total_degree(mdeg);
    for (std::size_t c = 0; c < layer.size(); ++c) {
      long long h = static_cast<long long>(dims[c]) - ranks[c] - ranks[c + 1];
      // beta_{c,a}(S/I) = h; shift to the ideal: beta_{c-1,a}(I).
      if (h != 0 && c >= 1) out.add(static_cast<int>(c) - 1, j, h);
    }
  }
}

/// beta_{i,a}(I) as reduced homology of the Koszul simplicial complex
/// K^a = { squarefree sigma : x^a / x_sigma in I }, over the lcm closure.
void upper_koszul(const MonomialIdeal& ideal, FieldSpec field, BettiTable& out) {
  const int n = ideal.vars();
  require(n <= 20, errc::out_of_budget, "too many variables for the multidegree route");

  std::vector<Exponents> closure;
  std::unordered_map<Exponents, bool, ExponentsHash> seen;
  for (const auto& g : ideal.gens()) {
    if (!seen.count(g.exponents())) {
      seen[g.exponents()] = true;
      closure.push_back(g.exponents());
    }
  }
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (const auto& g : ideal.gens()) {
      Exponents u = lcm_exps(closure[i], g.exponents());
      if (!seen.count(u)) {
        seen[u] = true;
        closure.push_back(u);
      }
    }
    require(closure.size() <= 2000000, errc::out_of_budget, "lcm closure too large");
  }

  for (const auto& a : closure) {
    std::vector<int> supp;
    for (int i = 0; i < n; ++i)
      if (a[static_cast<std::size_t>(i)] > 0) supp.push_back(i);
    const int s = static_cast<int>(supp.size());
    const std::uint32_t smax = 1u << s;
    // faces[mask]: x^a / x_sigma lies in I
    std::vector<char> face(smax, 0);
    Exponents quo = a;
    for (std::uint32_t mask = 0; mask < smax; ++mask) {
      quo = a;
      for (int b = 0; b < s; ++b)
        if (mask >> b & 1) quo[static_cast<std::size_t>(supp[static_cast<std::size_t>(b)])] -= 1;
      bool inside = false;
      for (const auto& g : ideal.gens()) {
        bool div = true;
        for (int i = 0; i < n && div; ++i)
          if (g.exponents()[static_cast<std::size_t>(i)] > quo[static_cast<std::size_t>(i)])
            div = false;
        if (div) {
          inside = true;
          break;
        }
      }
      face[mask] = inside ? 1 : 0;
    }
    if (!face[0]) continue; // x^a not in I: no contribution

    // reduced chain complex of K^a; layer c holds faces of cardinality c
    // (c = 0 is the empty face).
    std::vector<std::vector<std::uint32_t>> layer(static_cast<std::size_t>(s) + 1);
    for (std::uint32_t mask = 0; mask < smax; ++mask)
      if (face[mask]) layer[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    while (layer.size() > 1 && layer.back().empty()) layer.pop_back();
    std::vector<std::unordered_map<std::uint32_t, int>> index(layer.size());
    for (std::size_t c = 0; c < layer.size(); ++c)
      for (std::size_t k = 0; k < layer[c].size(); ++k) index[c][layer[c][k]] = static_cast<int>(k);
    std::vector<int> dims(layer.size());
    for (std::size_t c = 0; c < layer.size(); ++c) dims[c] = static_cast<int>(layer[c].size());
    std::vector<SparseIntMatrix> boundaries;
    for (std::size_t c = 1; c < layer.size(); ++c) {
      SparseIntMatrix m;
      m.rows = dims[c - 1];
      m.cols = dims[c];
      for (std::size_t k = 0; k < layer[c].size(); ++k) {
        std::uint32_t mask = layer[c][k];
        int sign = 1;
        for (int b = 0; b < s; ++b) {
          if (!(mask >> b & 1)) continue;
          std::uint32_t fmask = mask & ~(1u << b);
          if (face[fmask]) {
            m.entries.push_back({index[c - 1].at(fmask), static_cast<int>(k), sign});
          }
          sign = -sign;
        }
      }
      boundaries.push_back(std::move(m));
    }
    auto h = homology_dimensions(dims, boundaries, field);
    const int j = total_degree(a);
    // reduced homology: h~_{c-1} with c the cardinality layer;
    // beta_{i,a}(I) = dim h~_{i-1}(K^a).
    for (std::size_t c = 0; c < h.size(); ++c)
      if (h[c] != 0) out.add(static_cast<int>(c), j, h[c]);
  }
}

} // namespace

BettiTable oracle_betti_taylor(const MonomialIdeal& ideal, FieldSpec field,
                               std::uint64_t pivot_seed) {
  BettiTable t;
  taylor_strands(ideal, field, pivot_seed, t);
  return t;
}

BettiTable oracle_betti_upper_koszul(const MonomialIdeal& ideal, FieldSpec field) {
  BettiTable t;
  upper_koszul(ideal, field, t);
  return t;
}

namespace {

/// Largest single-cardinality layer of any degree strand; bounds the dense
/// elimination cost of the subset route.
std::size_t taylor_max_layer(const MonomialIdeal& ideal) {
  const int r = static_cast<int>(ideal.size());
  const std::uint64_t full = (1ull << r) - 1;
  std::vector<Exponents> gen_exps;
  for (const auto& g : ideal.gens()) gen_exps.push_back(g.exponents());
  std::vector<Exponents> lcms(full + 1);
  lcms[0] = Exponents(static_cast<std::size_t>(ideal.vars()), 0);
  std::unordered_map<Exponents, std::vector<std::size_t>, ExponentsHash> counts;
  std::size_t biggest = 0;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    int low = std::countr_zero(mask);
    std::uint64_t rest = mask & (mask - 1);
    lcms[mask] = rest == 0 ? gen_exps[static_cast<std::size_t>(low)]
                           : lcm_exps(lcms[rest], gen_exps[static_cast<std::size_t>(low)]);
    auto& layers = counts[lcms[mask]];
    std::size_t card = static_cast<std::size_t>(std::popcount(mask));
    if (layers.size() <= card) layers.resize(card + 1, 0);
    layers[card] += 1;
    biggest = std::max(biggest, layers[card]);
  }
  return biggest;
}

} // namespace

OracleBettiTable oracle_betti(const MonomialIdeal& ideal, FieldSpec field, int taylor_budget) {
  OracleBettiTable result;
  result.field = field;
  const int r = static_cast<int>(ideal.size());
  bool use_taylor = r <= taylor_budget;
  if (use_taylor && r > 10 && ideal.vars() <= 20) {
    // dense strand elimination degrades once a single layer grows large;
    // the multidegree route computes the same ranks locally
    std::size_t cap = field.is_rationals() ? 400 : 3000;
    if (taylor_max_layer(ideal) > cap) use_taylor = false;
  }
  if (use_taylor) {
    result.betti = oracle_betti_taylor(ideal, field);
  } else {
    result.betti = oracle_betti_upper_koszul(ideal, field);
  }
  result.projdim_ideal = result.betti.projdim();
  int d = 0;
  result.linear = result.betti.linear(&d);
  if (result.linear) result.linear_degree = d;
  return result;
}

std::pair<int, int> oracle_depth_projdim(const MonomialIdeal& ideal, FieldSpec field,
                                         int taylor_budget) {
  auto table = oracle_betti(ideal, field, taylor_budget);
  int projdim_quotient = table.projdim_ideal + 1;
  return {ideal.vars() - projdim_quotient, projdim_quotient};
}

long long hilbert_count(const MonomialIdeal& ideal, int degree, std::uint64_t guard) {
  require(degree >= 0, errc::invalid_input, "negative degree");
  auto stratum = monomials_of_degree(ideal.vars(), degree, guard);
  long long count = 0;
  for (const auto& w : stratum)
    if (ideal.contains(w)) ++count;
  return count;
}

} // namespace linquo
