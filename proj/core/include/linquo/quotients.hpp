#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "linquo/betti.hpp"
#include "linquo/ideal.hpp"

namespace linquo {

/// Witness that an ordering u_1,...,u_m of G(I) has linear quotients:
/// sets[i] holds the variable indices generating (u_1,...,u_i) : u_{i+1}
/// (0-based storage, 1-based indices inside; sets[0] is empty).
struct QuotientCertificate {
  MonomialIdeal ideal;
  std::vector<Monomial> order;
  std::vector<std::vector<int>> sets;

  int set_size(std::size_t i) const { return static_cast<int>(sets[i].size()); }
  int max_set_size() const;
};

struct QuotientFailure {
  int index_i = 0;   // 1-based position where the colon is not variable-generated
  int witness_j = 0; // 1-based earlier index not covered by any variable quotient
  std::vector<Monomial> colon_gens;
};

using CheckOrderResult = std::variant<QuotientCertificate, QuotientFailure>;

CheckOrderResult check_order(const MonomialIdeal& ideal, const std::vector<Monomial>& order);

enum class SearchStatus { found, none, unknown };

struct FindOrderResult {
  SearchStatus status = SearchStatus::unknown;
  std::optional<QuotientCertificate> certificate;
  std::uint64_t nodes_used = 0;
};

/// Tries the Lex, LexReversed and (for equigenerated ideals) Prec orders
/// first, then exhaustive backtracking over admissible prefixes with
/// memoization on generator subsets. `none` is only returned after the
/// search space is exhausted within budget.
FindOrderResult find_order(const MonomialIdeal& ideal, std::uint64_t budget = 1000000);

/// The decomposition function g of a linear-quotients ordering: g(w) is the
/// first generator u_j with w in (u_1,...,u_j).
class DecompositionFunction {
public:
  explicit DecompositionFunction(QuotientCertificate certificate);

  const QuotientCertificate& certificate() const { return cert_; }
  /// Errors with not_in_ideal when w lies outside I.
  Monomial apply(const Monomial& w) const;
  std::size_t apply_index(const Monomial& w) const; // 0-based index into order

  struct RegularityReport {
    bool regular = false;
    std::optional<Monomial> counterexample_u;
    std::optional<int> counterexample_s;
  };
  /// Checks set(g(x_s u)) subseteq set(u) for every generator u and every
  /// s in set(u).
  RegularityReport regularity() const;

private:
  QuotientCertificate cert_;
};

/// beta_i(I) = sum_k C(r_k, i) for equigenerated linear-quotients ideals;
/// errors with `unsupported` on mixed generator degrees.
BettiTable betti_from_certificate(const QuotientCertificate& certificate);
int projdim_from_certificate(const QuotientCertificate& certificate);

bool is_stable(const MonomialIdeal& ideal);

/// The unique factorization w = u * y with u in G(I) and max(u) <= min(y),
/// for stable ideals.
std::pair<Monomial, Monomial> canonical_decomposition(const MonomialIdeal& stable_ideal,
                                                      const Monomial& w);

} // namespace linquo
