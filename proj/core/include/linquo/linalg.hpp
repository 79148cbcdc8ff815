#pragma once

#include <cstdint>
#include <vector>

#include "linquo/error.hpp"

namespace linquo {

/// Coefficient field for rank and homology computations: characteristic 0
/// means exact rationals, otherwise the prime field F_p.
struct FieldSpec {
  int characteristic = 0;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(int p) { return FieldSpec{p}; }
  bool is_rationals() const { return characteristic == 0; }
};

struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  struct Entry {
    int row;
    int col;
    long long value;
  };
  std::vector<Entry> entries;
};

/// Exact rank over the chosen field. Rational ranks use fraction-free
/// elimination on arbitrary-precision integers.
int rank(const SparseIntMatrix& m, FieldSpec field);

/// Same rank but with a seeded pivot-order shuffle, for invariance checks.
int rank_with_pivot_seed(const SparseIntMatrix& m, FieldSpec field, std::uint64_t seed);

/// Dimensions of homology ker d_i / im d_{i+1} for a complex
///   C_k --d_k--> C_{k-1} --> ... --> C_0
/// given as dims[0..k] and boundary maps d[i] : C_i -> C_{i-1} for i>=1.
std::vector<long long> homology_dimensions(const std::vector<int>& dims,
                                           const std::vector<SparseIntMatrix>& boundaries,
                                           FieldSpec field);

} // namespace linquo
