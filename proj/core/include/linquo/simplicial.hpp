#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linquo/ideal.hpp"
#include "linquo/linalg.hpp"
#include "linquo/quotients.hpp"

namespace linquo {

/// Simplicial complex on the vertex set [n], stored by its facets
/// (pairwise incomparable, canonically sorted). The complex {∅} is
/// represented by a single empty facet; a void complex (no faces at all) by
/// an empty facet list.
class SimplicialComplex {
public:
  static SimplicialComplex from_facets(int n, std::vector<std::vector<int>> facets);
  static SimplicialComplex empty_complex(int n); // {∅}
  static SimplicialComplex void_complex(int n);
  static SimplicialComplex full_simplex(int n);

  int vertices() const { return n_; }
  const std::vector<std::uint32_t>& facet_masks() const { return facets_; }
  std::vector<std::vector<int>> facets() const;
  std::size_t facet_count() const { return facets_.size(); }

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const; // {∅}
  bool is_simplex() const { return facets_.size() == 1; }
  bool is_full_simplex() const;
  bool pure() const;
  int dim() const; // -1 for {∅}; errors on the void complex
  /// True when every vertex of [n] lies in some facet.
  bool covers_all_vertices() const;

  bool is_face(std::uint32_t mask) const;
  bool is_face(const std::vector<int>& face) const;
  /// All faces, as bitmasks, including the empty face (unless void).
  std::vector<std::uint32_t> all_faces() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }
  friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
    return !(a == b);
  }

private:
  SimplicialComplex(int n, std::vector<std::uint32_t> facets)
      : n_(n), facets_(std::move(facets)) {}
  int n_ = 0;
  std::vector<std::uint32_t> facets_;
};

std::uint32_t face_mask(int n, const std::vector<int>& face);
std::vector<int> mask_to_face(std::uint32_t mask);

struct SrIdealResult {
  std::optional<MonomialIdeal> ideal; // empty exactly for the full simplex
  bool full_simplex = false;
};

/// Stanley-Reisner ideal, generated by the minimal non-faces.
SrIdealResult sr_ideal(const SimplicialComplex& complex);
/// Facet ideal (x_F : F a facet).
MonomialIdeal facet_ideal(const SimplicialComplex& complex);
/// Stanley-Reisner ideal of the Alexander dual: facet complements.
MonomialIdeal dual_sr_ideal(const SimplicialComplex& complex);

/// Alexander dual; errors on the full simplex (its dual is void).
SimplicialComplex alexander_dual(const SimplicialComplex& complex);

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// lk(F, Δ) and del(F, Δ); F must be a face.
SimplicialComplex link(const SimplicialComplex& complex, const std::vector<int>& face);
SimplicialComplex deletion(const SimplicialComplex& complex, const std::vector<int>& face);

struct HomologyProfile {
  FieldSpec field;
  /// reduced_betti[i] = dim h~_{i-1}: index 0 reports h~_{-1}, index k
  /// reports h~_{k-1}, up to the complex dimension.
  std::vector<long long> reduced_betti;

  long long reduced(int i) const { // h~_i
    int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(reduced_betti.size())) return 0;
    return reduced_betti[static_cast<std::size_t>(idx)];
  }
};

HomologyProfile homology(const SimplicialComplex& complex, FieldSpec field);

/// Reisner criterion: h~_i(lk(F, Δ); k) = 0 for every face F and every
/// i < dim lk(F, Δ).
bool complex_is_cm(const SimplicialComplex& complex, FieldSpec field);

struct ShellingResult {
  SearchStatus status = SearchStatus::unknown;
  std::vector<int> order; // facet indices into facets(), when found
};

/// Shellability via linear quotients of the dual Stanley-Reisner ideal; the
/// returned facet order is re-validated against the exchange condition.
/// Errors on non-pure complexes.
ShellingResult is_shellable(const SimplicialComplex& complex, std::uint64_t budget = 1000000);

/// Literal validation of a shelling order (condition: for all j < i there is
/// v in F_i \ F_j and k < i with F_i \ F_k = {v}).
bool shelling_order_valid(const SimplicialComplex& complex, const std::vector<int>& order);

bool is_vertex_decomposable(const SimplicialComplex& complex);

struct ShiftedResult {
  bool shifted = false;
  std::optional<std::vector<int>> labeling; // labeling[v-1] = new label of v
};
/// Searches all vertex relabelings; guarded to n <= 8.
ShiftedResult is_shifted(const SimplicialComplex& complex);

/// True when the fixed labeling (identity) already satisfies the shifted
/// exchange property.
bool is_shifted_as_labeled(const SimplicialComplex& complex);

struct EagonReinerReport {
  bool cm_over_field = false;
  bool dual_linear = false;
  bool agree = false;
  int projdim_sr_ideal = 0;  // projdim(I_Δ)
  int reg_dual_ring = 0;     // reg(k[Δ^v])
  bool terai_equal = false;
};

EagonReinerReport eagon_reiner_check(const SimplicialComplex& complex, FieldSpec field);

} // namespace linquo
