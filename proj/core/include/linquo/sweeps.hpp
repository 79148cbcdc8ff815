#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linquo/linalg.hpp"
#include "linquo/simplicial.hpp"

namespace linquo {

struct SweepReport {
  std::uint64_t instances = 0;
  std::uint64_t checked = 0; // sub-checks performed
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Every equigenerated linear-quotients ideal with at most `max_gens`
/// generators, n <= nmax, d <= dmax: the binomial Betti formula must match
/// the brute-force oracle over the given field.
SweepReport sweep_quotient_betti(int nmax, int dmax, int max_gens, FieldSpec field,
                                 int threads = 1);

/// Every lexsegment with n <= nmax, d <= dmax: closed-form dim, depth and
/// Cohen-Macaulay classification against the minimal-prime and projective
/// dimension oracles, linear-resolution classification against oracle
/// linearity, and validation of the produced quotient orders.
SweepReport sweep_lexsegment(int nmax, int dmax, FieldSpec field, int threads = 1);

/// Random pure complexes: Cohen-Macaulay over the field (Reisner) must
/// match linearity of the dual ideal resolution (Eagon-Reiner), and the
/// projdim/regularity transfer must hold (Terai).
SweepReport sweep_eagon_reiner(int n, int count, std::uint64_t seed, FieldSpec field,
                               int threads = 1);

/// Hierarchy sweep: shifted => vertex-decomposable => shellable => CM over
/// the rationals, exhaustively for n <= 5 and on random samples at n = 6.
SweepReport sweep_hierarchy(int nmax, int random_count, std::uint64_t seed, int threads = 1);

/// Uniformly random pure complex on [n] with all vertices covered.
SimplicialComplex random_pure_complex(int n, std::uint64_t seed);

} // namespace linquo
