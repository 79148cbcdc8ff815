#include "linquo/quotients.hpp"

#include <algorithm>
#include <unordered_map>

namespace linquo {

int QuotientCertificate::max_set_size() const {
  int m = 0;
  for (const auto& s : sets) m = std::max(m, static_cast<int>(s.size()));
  return m;
}

namespace {

/// Variable indices l such that some u_k (k in prefix) has u_k : u equal to
/// the single variable x_l, plus coverage test of every prefix colon by those
/// variables. Implements the finite criterion for a variable-generated colon
/// ideal.
bool colon_is_variable_generated(const std::vector<Monomial>& order, std::size_t prefix_len,
                                 const Monomial& u, std::vector<int>* set_out,
                                 int* witness_out) {
  std::vector<int> vars;
  for (std::size_t k = 0; k < prefix_len; ++k) {
    Monomial q = order[k].colon(u);
    if (q.degree() == 1) vars.push_back(*q.max_index());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (std::size_t j = 0; j < prefix_len; ++j) {
    Monomial q = order[j].colon(u);
    bool covered = false;
    for (int l : vars)
      if (q.exponent(l) >= 1) {
        covered = true;
        break;
      }
    if (!covered) {
      if (witness_out) *witness_out = static_cast<int>(j) + 1;
      return false;
    }
  }
  if (set_out) *set_out = std::move(vars);
  return true;
}

std::vector<Monomial> colon_minimal_gens(const std::vector<Monomial>& order,
                                         std::size_t prefix_len, const Monomial& u) {
  std::vector<Monomial> quotients;
  quotients.reserve(prefix_len);
  for (std::size_t k = 0; k < prefix_len; ++k) quotients.push_back(order[k].colon(u));
  return minimalize(u.vars(), std::move(quotients));
}

} // namespace

CheckOrderResult check_order(const MonomialIdeal& ideal, const std::vector<Monomial>& order) {
  require(order.size() == ideal.size(), errc::invalid_input,
          "order must be a permutation of the minimal generators");
  std::vector<Monomial> sorted_a = order;
  std::vector<Monomial> sorted_b = ideal.gens();
  auto less = [](const Monomial& a, const Monomial& b) { return lex_less(a, b); };
  std::sort(sorted_a.begin(), sorted_a.end(), less);
  std::sort(sorted_b.begin(), sorted_b.end(), less);
  require(sorted_a == sorted_b, errc::invalid_input,
          "order must be a permutation of the minimal generators");

  std::vector<std::vector<int>> sets;
  sets.emplace_back();
  for (std::size_t i = 1; i < order.size(); ++i) {
    std::vector<int> set;
    int witness = 0;
    if (!colon_is_variable_generated(order, i, order[i], &set, &witness)) {
      return QuotientFailure{static_cast<int>(i) + 1, witness,
                             colon_minimal_gens(order, i, order[i])};
    }
    sets.push_back(std::move(set));
  }
  return QuotientCertificate{ideal, order, std::move(sets)};
}

namespace {

struct PrefixSearch {
  const std::vector<Monomial>& gens; // descending lex, the canonical candidate order
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::unordered_map<std::uint64_t, bool> memo; // mask -> prefix orderable

  bool feasible(std::uint64_t mask) {
    if (mask == 0) return true;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    bool ok = false;
    const int r = static_cast<int>(gens.size());
    for (int last = 0; last < r && !ok; ++last) {
      if (!(mask >> last & 1)) continue;
      std::uint64_t rest = mask & ~(1ull << last);
      if (!admissible(rest, gens[static_cast<std::size_t>(last)])) continue;
      if (feasible(rest)) ok = true;
      if (exhausted) return false;
    }
    memo[mask] = ok;
    return ok;
  }

  bool admissible(std::uint64_t prefix_mask, const Monomial& u) const {
    if (prefix_mask == 0) return true;
    const int r = static_cast<int>(gens.size());
    // variables arising as single-variable colons
    std::vector<int> vars;
    for (int k = 0; k < r; ++k) {
      if (!(prefix_mask >> k & 1)) continue;
      Monomial q = gens[static_cast<std::size_t>(k)].colon(u);
      if (q.degree() == 1) vars.push_back(*q.max_index());
    }
    if (vars.empty()) return false;
    for (int j = 0; j < r; ++j) {
      if (!(prefix_mask >> j & 1)) continue;
      Monomial q = gens[static_cast<std::size_t>(j)].colon(u);
      bool covered = false;
      for (int l : vars)
        if (q.exponent(l) >= 1) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  }
};

} // namespace

FindOrderResult find_order(const MonomialIdeal& ideal, std::uint64_t budget) {
  FindOrderResult result;
  const auto try_order = [&](std::vector<Monomial> order) -> bool {
    auto res = check_order(ideal, order);
    if (auto* cert = std::get_if<QuotientCertificate>(&res)) {
      result.status = SearchStatus::found;
      result.certificate = std::move(*cert);
      return true;
    }
    return false;
  };

  // canonical orders: Lex descending, LexReversed descending, Prec ascending
  std::vector<Monomial> lex = ideal.gens();
  if (try_order(lex)) return result;
  std::vector<Monomial> lexrev = ideal.gens();
  std::sort(lexrev.begin(), lexrev.end(), [](const Monomial& a, const Monomial& b) {
    return compare(a, b, TermOrder::lex_reversed) == std::strong_ordering::greater;
  });
  if (try_order(lexrev)) return result;
  if (ideal.generated_in_one_degree()) {
    std::vector<Monomial> prec = ideal.gens();
    std::sort(prec.begin(), prec.end(), [](const Monomial& a, const Monomial& b) {
      return compare(a, b, TermOrder::prec) == std::strong_ordering::less;
    });
    if (try_order(prec)) return result;
  }

  const int r = static_cast<int>(ideal.size());
  if (r > 62) {
    result.status = SearchStatus::unknown;
    return result;
  }
  PrefixSearch search{ideal.gens(), budget, 0, false, {}};
  const std::uint64_t full = (1ull << r) - 1;
  bool ok = search.feasible(full);
  result.nodes_used = search.nodes;
  if (search.exhausted) {
    result.status = SearchStatus::unknown;
    return result;
  }
  if (!ok) {
    result.status = SearchStatus::none;
    return result;
  }
  // reconstruct one ordering, choosing the earliest feasible last generator
  // in descending lex so the result is deterministic.
  std::vector<Monomial> order(static_cast<std::size_t>(r), Monomial::one(ideal.vars()));
  std::uint64_t mask = full;
  for (int pos = r - 1; pos >= 0; --pos) {
    bool placed = false;
    for (int last = 0; last < r && !placed; ++last) {
      if (!(mask >> last & 1)) continue;
      std::uint64_t rest = mask & ~(1ull << last);
      if (!search.admissible(rest, ideal.gens()[static_cast<std::size_t>(last)])) continue;
      if (!search.feasible(rest)) continue;
      order[static_cast<std::size_t>(pos)] = ideal.gens()[static_cast<std::size_t>(last)];
      mask = rest;
      placed = true;
    }
    require(placed, errc::invariant_violation, "certificate reconstruction failed");
  }
  bool final_ok = try_order(order);
  require(final_ok, errc::invariant_violation, "reconstructed order failed validation");
  return result;
}

DecompositionFunction::DecompositionFunction(QuotientCertificate certificate)
    : cert_(std::move(certificate)) {}

std::size_t DecompositionFunction::apply_index(const Monomial& w) const {
  for (std::size_t j = 0; j < cert_.order.size(); ++j)
    if (cert_.order[j].divides(w)) return j;
  fail(errc::not_in_ideal, "monomial lies outside the ideal");
}

Monomial DecompositionFunction::apply(const Monomial& w) const {
  return cert_.order[apply_index(w)];
}

DecompositionFunction::RegularityReport DecompositionFunction::regularity() const {
  for (std::size_t i = 0; i < cert_.order.size(); ++i) {
    const Monomial& u = cert_.order[i];
    for (int s : cert_.sets[i]) {
      std::size_t gi = apply_index(u.times_variable(s));
      const auto& gset = cert_.sets[gi];
      const auto& uset = cert_.sets[i];
      bool subset = std::includes(uset.begin(), uset.end(), gset.begin(), gset.end());
      if (!subset) return RegularityReport{false, u, s};
    }
  }
  return RegularityReport{true, std::nullopt, std::nullopt};
}

BettiTable betti_from_certificate(const QuotientCertificate& certificate) {
  auto degree = certificate.ideal.generated_in_one_degree();
  require(degree.has_value(), errc::unsupported,
          "Betti formula needs generators of a single degree");
  BettiTable t;
  int rmax = certificate.max_set_size();
  for (int i = 0; i <= rmax; ++i) {
    long long total = 0;
    for (const auto& s : certificate.sets)
      total += static_cast<long long>(
          binomial(static_cast<std::uint64_t>(s.size()), static_cast<std::uint64_t>(i)));
    if (total != 0) t.add(i, *degree + i, total);
  }
  return t;
}

int projdim_from_certificate(const QuotientCertificate& certificate) {
  return certificate.max_set_size();
}

bool is_stable(const MonomialIdeal& ideal) {
  for (const Monomial& u : ideal.gens()) {
    auto m = u.max_index();
    if (!m) continue;
    for (int i = 1; i < *m; ++i) {
      Monomial moved = u.times_variable(i).divide_by_variable(*m);
      if (!ideal.contains(moved)) return false;
    }
  }
  return true;
}

std::pair<Monomial, Monomial> canonical_decomposition(const MonomialIdeal& stable_ideal,
                                                      const Monomial& w) {
  require(stable_ideal.contains(w), errc::not_in_ideal, "monomial lies outside the ideal");
  for (const Monomial& u : stable_ideal.gens()) {
    if (!u.divides(w)) continue;
    Monomial y = w.divide(u);
    auto maxu = u.max_index();
    auto miny = y.min_index();
    if (!maxu || !miny || *maxu <= *miny) return {u, y};
  }
  fail(errc::invariant_violation, "no canonical factorization; ideal is not stable");
}

} // namespace linquo
