#include "linquo/ideal.hpp"

#include <algorithm>
#include <functional>

namespace linquo {

std::vector<Monomial> minimalize(int n, std::vector<Monomial> generators) {
  require(!generators.empty(), errc::invalid_input, "empty generator list");
  for (const Monomial& g : generators) {
    require(g.vars() == n, errc::dimension_mismatch, "generator in wrong ambient ring");
    require(!g.is_one(), errc::invalid_input, "the unit ideal is not representable");
  }
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_greater(a, b);
  });
  std::vector<Monomial> kept;
  for (const Monomial& g : generators) {
    bool divisible = false;
    for (const Monomial& k : kept)
      if (k.divides(g)) {
        divisible = true;
        break;
      }
    if (!divisible) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), lex_greater);
  return kept;
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Monomial> generators) {
  return MonomialIdeal(n, minimalize(n, std::move(generators)));
}

bool MonomialIdeal::contains(const Monomial& w) const {
  require(w.vars() == n_, errc::dimension_mismatch, "membership across ambient rings");
  for (const Monomial& g : gens_)
    if (g.divides(w)) return true;
  return false;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

std::optional<int> MonomialIdeal::generated_in_one_degree() const {
  int d = gens_.front().degree();
  for (const Monomial& g : gens_)
    if (g.degree() != d) return std::nullopt;
  return d;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require(a.vars() == b.vars(), errc::dimension_mismatch, "sum across ambient rings");
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal::from_generators(a.vars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require(a.vars() == b.vars(), errc::dimension_mismatch, "intersection across ambient rings");
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& g : a.gens())
    for (const Monomial& h : b.gens()) gens.push_back(g.lcm(h));
  return MonomialIdeal::from_generators(a.vars(), std::move(gens));
}

MonomialIdeal colon_by(const MonomialIdeal& ideal, const Monomial& w) {
  require(w.vars() == ideal.vars(), errc::dimension_mismatch, "colon across ambient rings");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.gens()) {
    Monomial q = g.colon(w);
    require(!q.is_one(), errc::invalid_input, "colon ideal is the unit ideal");
    gens.push_back(std::move(q));
  }
  return MonomialIdeal::from_generators(ideal.vars(), std::move(gens));
}

namespace {

/// Minimal transversals of the support hypergraph, by depth-first branching
/// on the first uncovered edge.
void minimal_transversals(const std::vector<std::vector<int>>& edges, int n,
                          std::vector<std::vector<int>>& out) {
  std::vector<int> chosen;
  std::function<void()> rec = [&]() {
    const std::vector<int>* uncovered = nullptr;
    for (const auto& e : edges) {
      bool hit = false;
      for (int v : e)
        if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) {
          hit = true;
          break;
        }
      if (!hit) {
        uncovered = &e;
        break;
      }
    }
    if (!uncovered) {
      out.push_back(chosen);
      return;
    }
    for (int v : *uncovered) {
      chosen.push_back(v);
      rec();
      chosen.pop_back();
    }
  };
  (void)n;
  rec();
}

} // namespace

RadicalPrimes radical_and_primes(const MonomialIdeal& ideal) {
  const int n = ideal.vars();
  std::vector<Monomial> sqfree;
  std::vector<std::vector<int>> supports;
  sqfree.reserve(ideal.size());
  for (const Monomial& g : ideal.gens()) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int i : g.support()) e[static_cast<std::size_t>(i - 1)] = 1;
    sqfree.emplace_back(std::move(e));
    supports.push_back(g.support());
  }
  MonomialIdeal radical = MonomialIdeal::from_generators(n, std::move(sqfree));

  std::vector<std::vector<int>> edges;
  for (const Monomial& g : radical.gens()) edges.push_back(g.support());

  std::vector<std::vector<int>> covers;
  minimal_transversals(edges, n, covers);
  for (auto& c : covers) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  // keep only inclusion-minimal covers (branching may emit supersets)
  std::sort(covers.begin(), covers.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  std::vector<std::vector<int>> minimal;
  for (const auto& c : covers) {
    bool has_subset = false;
    for (const auto& m : minimal) {
      if (std::includes(c.begin(), c.end(), m.begin(), m.end())) {
        has_subset = true;
        break;
      }
    }
    if (!has_subset) minimal.push_back(c);
  }

  std::size_t min_size = minimal.empty() ? 0 : minimal.front().size();
  for (const auto& p : minimal) min_size = std::min(min_size, p.size());
  return RadicalPrimes{std::move(radical), PrimeDecomposition{std::move(minimal)},
                       n - static_cast<int>(min_size)};
}

int krull_dim(const MonomialIdeal& ideal) { return radical_and_primes(ideal).krull_dim_quotient; }

} // namespace linquo
