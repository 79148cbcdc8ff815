#pragma once

#include <cstdint>
#include <optional>

#include "linquo/betti.hpp"
#include "linquo/ideal.hpp"
#include "linquo/linalg.hpp"

namespace linquo {

/// Brute-force multigraded Betti numbers of a monomial ideal, computed by
/// exact linear algebra with no closed-form shortcuts. Used as the trusted
/// baseline for every formula in the library.
struct OracleBettiTable {
  FieldSpec field;
  BettiTable betti;        // beta_{i,j}(I), i >= 0
  int projdim_ideal = 0;   // projdim(I)
  bool linear = false;     // all beta_{i,j} = 0 unless j = i + d
  std::optional<int> linear_degree;
};

/// Betti numbers of I. Ideals with at most `taylor_budget` generators go
/// through degree-strand homology of the Taylor complex; larger ideals use
/// per-multidegree Koszul simplicial complexes over the lcm closure. The
/// two routes agree and are cross-checked in the test suite.
OracleBettiTable oracle_betti(const MonomialIdeal& ideal, FieldSpec field,
                              int taylor_budget = 16);

/// Force one specific route (for cross-validation).
BettiTable oracle_betti_taylor(const MonomialIdeal& ideal, FieldSpec field,
                               std::uint64_t pivot_seed = 0);
BettiTable oracle_betti_upper_koszul(const MonomialIdeal& ideal, FieldSpec field);

/// (depth S/I, projdim S/I) via projdim(S/I) = projdim(I) + 1 and the
/// Auslander-Buchsbaum equality depth = n - projdim.
std::pair<int, int> oracle_depth_projdim(const MonomialIdeal& ideal, FieldSpec field,
                                         int taylor_budget = 16);

/// Exact count of monomials of degree k lying in I, by divisibility
/// filtering of the whole degree stratum.
long long hilbert_count(const MonomialIdeal& ideal, int degree,
                        std::uint64_t guard = 10000000);

} // namespace linquo
