#pragma once

#include <optional>
#include <vector>

#include "linquo/monomial.hpp"

namespace linquo {

/// A proper nonzero monomial ideal in canonical form: the unique minimal
/// generating set G(I), sorted strictly descending in Lex. The unit ideal
/// (a generator equal to 1) and the zero ideal are rejected.
class MonomialIdeal {
public:
  static MonomialIdeal from_generators(int n, std::vector<Monomial> generators);

  int vars() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool contains(const Monomial& w) const;
  bool is_squarefree() const;
  /// Degree when all generators share it.
  std::optional<int> generated_in_one_degree() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
    return !(a == b);
  }

private:
  MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {}
  int n_ = 0;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal subset in canonical order; idempotent.
std::vector<Monomial> minimalize(int n, std::vector<Monomial> generators);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// G(I ∩ J) from pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I : w), errors with invalid_input if the colon is the unit ideal.
MonomialIdeal colon_by(const MonomialIdeal& ideal, const Monomial& w);

struct PrimeDecomposition {
  /// Each prime as its ascending list of variable indices; primes are
  /// pairwise incomparable and sorted by (size, lex).
  std::vector<std::vector<int>> primes;
};

struct RadicalPrimes {
  MonomialIdeal radical;
  PrimeDecomposition primes;
  int krull_dim_quotient; // dim S/I = n - min prime size
};

RadicalPrimes radical_and_primes(const MonomialIdeal& ideal);
int krull_dim(const MonomialIdeal& ideal);

} // namespace linquo
