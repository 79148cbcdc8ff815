#include "linquo/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "linquo/oracle.hpp"

namespace linquo {

std::uint32_t face_mask(int n, const std::vector<int>& face) {
  std::uint32_t mask = 0;
  for (int v : face) {
    require(v >= 1 && v <= n, errc::invalid_input, "vertex out of range");
    mask |= 1u << (v - 1);
  }
  return mask;
}

std::vector<int> mask_to_face(std::uint32_t mask) {
  std::vector<int> face;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) face.push_back(v + 1);
  return face;
}

SimplicialComplex SimplicialComplex::from_facets(int n,
                                                 std::vector<std::vector<int>> facets) {
  require(n >= 1 && n <= 30, errc::invalid_input, "vertex count out of range");
  std::vector<std::uint32_t> masks;
  masks.reserve(facets.size());
  for (const auto& f : facets) masks.push_back(face_mask(n, f));
  // keep inclusion-maximal faces only
  std::vector<std::uint32_t> maximal;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < masks.size() && !dominated; ++j)
      if (i != j && (masks[i] & masks[j]) == masks[i] &&
          (masks[i] != masks[j] || j < i))
        dominated = true;
    if (!dominated) maximal.push_back(masks[i]);
  }
  std::sort(maximal.begin(), maximal.end(), [](std::uint32_t a, std::uint32_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca > cb;
    return a < b;
  });
  return SimplicialComplex(n, std::move(maximal));
}

SimplicialComplex SimplicialComplex::empty_complex(int n) {
  return from_facets(n, {std::vector<int>{}});
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
  return SimplicialComplex(n, {});
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  return from_facets(n, {all});
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
  std::vector<std::vector<int>> out;
  out.reserve(facets_.size());
  for (auto m : facets_) out.push_back(mask_to_face(m));
  return out;
}

bool SimplicialComplex::is_irrelevant() const {
  return facets_.size() == 1 && facets_[0] == 0;
}

bool SimplicialComplex::is_full_simplex() const {
  return facets_.size() == 1 && std::popcount(facets_[0]) == n_;
}

bool SimplicialComplex::pure() const {
  if (facets_.empty()) return true;
  int d = std::popcount(facets_.front());
  for (auto m : facets_)
    if (std::popcount(m) != d) return false;
  return true;
}

int SimplicialComplex::dim() const {
  require(!is_void(), errc::invalid_input, "void complex has no dimension");
  int d = 0;
  for (auto m : facets_) d = std::max(d, std::popcount(m));
  return d - 1;
}

bool SimplicialComplex::covers_all_vertices() const {
  std::uint32_t all = 0;
  for (auto m : facets_) all |= m;
  return all == (n_ >= 32 ? ~0u : (1u << n_) - 1);
}

bool SimplicialComplex::is_face(std::uint32_t mask) const {
  for (auto f : facets_)
    if ((mask & f) == mask) return true;
  return false;
}

bool SimplicialComplex::is_face(const std::vector<int>& face) const {
  return is_face(face_mask(n_, face));
}

std::vector<std::uint32_t> SimplicialComplex::all_faces() const {
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> out;
  for (auto f : facets_) {
    // enumerate subsets of f
    std::uint32_t sub = f;
    for (;;) {
      if (seen.insert(sub).second) out.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    return a < b;
  });
  return out;
}

namespace {

Monomial mask_monomial(int n, std::uint32_t mask) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) e[static_cast<std::size_t>(v)] = 1;
  return Monomial(std::move(e));
}

std::uint32_t full_mask(int n) { return (n >= 32) ? ~0u : (1u << n) - 1; }

} // namespace

SrIdealResult sr_ideal(const SimplicialComplex& complex) {
  const int n = complex.vertices();
  require(n <= 22, errc::out_of_budget, "too many vertices for non-face enumeration");
  require(!complex.is_void(), errc::invalid_input, "void complex has no Stanley-Reisner ideal");
  if (complex.is_full_simplex()) return SrIdealResult{std::nullopt, true};
  // minimal non-faces: non-faces all of whose facets (one vertex removed)
  // are faces
  std::vector<Monomial> gens;
  for (std::uint32_t mask = 1; mask <= full_mask(n); ++mask) {
    if (complex.is_face(mask)) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v)
      if (mask >> v & 1)
        if (!complex.is_face(mask & ~(1u << v))) minimal = false;
    if (minimal) gens.push_back(mask_monomial(n, mask));
  }
  return SrIdealResult{MonomialIdeal::from_generators(n, std::move(gens)), false};
}

MonomialIdeal facet_ideal(const SimplicialComplex& complex) {
  require(!complex.is_void() && !complex.is_irrelevant(), errc::invalid_input,
          "facet ideal needs a nonempty facet");
  std::vector<Monomial> gens;
  for (auto f : complex.facet_masks()) gens.push_back(mask_monomial(complex.vertices(), f));
  return MonomialIdeal::from_generators(complex.vertices(), std::move(gens));
}

MonomialIdeal dual_sr_ideal(const SimplicialComplex& complex) {
  const int n = complex.vertices();
  require(!complex.is_void(), errc::invalid_input, "void complex has no dual ideal");
  std::vector<Monomial> gens;
  for (auto f : complex.facet_masks()) {
    std::uint32_t comp = full_mask(n) & ~f;
    require(comp != 0, errc::invalid_input,
            "full simplex facet yields the unit ideal");
    gens.push_back(mask_monomial(n, comp));
  }
  return MonomialIdeal::from_generators(n, std::move(gens));
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
  const int n = complex.vertices();
  require(!complex.is_full_simplex(), errc::invalid_input,
          "the Alexander dual of the full simplex is the void complex");
  require(!complex.is_void(), errc::invalid_input,
          "the Alexander dual of the void complex is the full simplex");
  // facets of the dual are complements of minimal non-faces
  auto sr = sr_ideal(complex);
  std::vector<std::vector<int>> facets;
  for (const auto& g : sr.ideal->gens()) {
    std::uint32_t mask = 0;
    for (int v : g.support()) mask |= 1u << (v - 1);
    facets.push_back(mask_to_face(full_mask(n) & ~mask));
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  require(a.vertices() == b.vertices(), errc::dimension_mismatch, "vertex sets differ");
  auto facets = a.facets();
  auto fb = b.facets();
  facets.insert(facets.end(), fb.begin(), fb.end());
  return SimplicialComplex::from_facets(a.vertices(), std::move(facets));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a,
                                       const SimplicialComplex& b) {
  require(a.vertices() == b.vertices(), errc::dimension_mismatch, "vertex sets differ");
  if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(a.vertices());
  // maximal faces common to both: intersections of facet pairs
  std::vector<std::vector<int>> faces;
  for (auto fa : a.facet_masks())
    for (auto fb : b.facet_masks()) faces.push_back(mask_to_face(fa & fb));
  return SimplicialComplex::from_facets(a.vertices(), std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& complex, const std::vector<int>& face) {
  std::uint32_t fm = face_mask(complex.vertices(), face);
  require(complex.is_face(fm), errc::invalid_input, "link of a non-face");
  std::vector<std::vector<int>> facets;
  for (auto t : complex.facet_masks())
    if ((fm & t) == fm) facets.push_back(mask_to_face(t & ~fm));
  return SimplicialComplex::from_facets(complex.vertices(), std::move(facets));
}

SimplicialComplex deletion(const SimplicialComplex& complex, const std::vector<int>& face) {
  std::uint32_t fm = face_mask(complex.vertices(), face);
  require(complex.is_face(fm), errc::invalid_input, "deletion of a non-face");
  std::vector<std::vector<int>> facets;
  for (auto t : complex.facet_masks()) facets.push_back(mask_to_face(t & ~fm));
  return SimplicialComplex::from_facets(complex.vertices(), std::move(facets));
}

HomologyProfile homology(const SimplicialComplex& complex, FieldSpec field) {
  HomologyProfile profile;
  profile.field = field;
  if (complex.is_void()) return profile;
  auto faces = complex.all_faces();
  int top = 0;
  for (auto f : faces) top = std::max(top, std::popcount(f));
  // layer c: faces with c vertices; layer 0 is the empty face
  std::vector<std::vector<std::uint32_t>> layer(static_cast<std::size_t>(top) + 1);
  for (auto f : faces) layer[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  std::vector<std::unordered_map<std::uint32_t, int>> index(layer.size());
  for (std::size_t c = 0; c < layer.size(); ++c)
    for (std::size_t k = 0; k < layer[c].size(); ++k)
      index[c][layer[c][k]] = static_cast<int>(k);
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
      for (int v = 0; v < complex.vertices(); ++v) {
        if (!(mask >> v & 1)) continue;
        m.entries.push_back({index[c - 1].at(mask & ~(1u << v)), static_cast<int>(k), sign});
        sign = -sign;
      }
    }
    boundaries.push_back(std::move(m));
  }
  profile.reduced_betti = homology_dimensions(dims, boundaries, field);
  return profile;
}

bool complex_is_cm(const SimplicialComplex& complex, FieldSpec field) {
  if (complex.is_void()) return false;
  if (complex.is_irrelevant()) return true;
  for (auto fm : complex.all_faces()) {
    auto lk = link(complex, mask_to_face(fm));
    int lkdim = lk.dim();
    auto profile = homology(lk, field);
    for (int i = -1; i < lkdim; ++i)
      if (profile.reduced(i) != 0) return false;
  }
  return true;
}

bool shelling_order_valid(const SimplicialComplex& complex, const std::vector<int>& order) {
  const auto& masks = complex.facet_masks();
  if (order.size() != masks.size()) return false;
  for (std::size_t i = 1; i < order.size(); ++i) {
    std::uint32_t fi = masks[static_cast<std::size_t>(order[i])];
    for (std::size_t j = 0; j < i; ++j) {
      std::uint32_t fj = masks[static_cast<std::size_t>(order[j])];
      bool witnessed = false;
      std::uint32_t diff = fi & ~fj;
      for (int v = 0; v < complex.vertices() && !witnessed; ++v) {
        if (!(diff >> v & 1)) continue;
        for (std::size_t k = 0; k < i && !witnessed; ++k) {
          std::uint32_t fk = masks[static_cast<std::size_t>(order[k])];
          if ((fi & ~fk) == (1u << v)) witnessed = true;
        }
      }
      if (!witnessed) return false;
    }
  }
  return true;
}

ShellingResult is_shellable(const SimplicialComplex& complex, std::uint64_t budget) {
  require(complex.pure(), errc::unsupported, "shellability test needs a pure complex");
  ShellingResult result;
  if (complex.is_void() || complex.is_irrelevant() || complex.is_simplex()) {
    result.status = SearchStatus::found;
    result.order.resize(complex.facet_count());
    std::iota(result.order.begin(), result.order.end(), 0);
    return result;
  }
  require(!complex.is_full_simplex(), errc::invalid_input, "full simplex is a simplex");
  MonomialIdeal dual = dual_sr_ideal(complex);
  auto found = find_order(dual, budget);
  result.status = found.status;
  if (found.status != SearchStatus::found) return result;

  // generator u = x_{F^c} corresponds to facet F; map certificate order back
  std::unordered_map<std::uint32_t, int> facet_of;
  const int n = complex.vertices();
  for (std::size_t idx = 0; idx < complex.facet_masks().size(); ++idx) {
    std::uint32_t comp = full_mask(n) & ~complex.facet_masks()[idx];
    facet_of[comp] = static_cast<int>(idx);
  }
  for (const auto& g : found.certificate->order) {
    std::uint32_t mask = 0;
    for (int v : g.support()) mask |= 1u << (v - 1);
    result.order.push_back(facet_of.at(mask));
  }
  require(shelling_order_valid(complex, result.order), errc::invariant_violation,
          "certificate order failed the exchange condition");
  return result;
}

namespace {

struct MaskVecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto m : v) {
      h ^= m + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

bool vertex_decomposable_rec(const SimplicialComplex& complex,
                             std::unordered_map<std::vector<std::uint32_t>, bool,
                                                MaskVecHash>& memo) {
  if (!complex.pure()) return false;
  if (complex.is_void()) return false;
  if (complex.is_irrelevant() || complex.is_simplex()) return true;
  auto key = complex.facet_masks();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  memo[key] = false; // guards cycles (none expected: vertices shrink)
  std::uint32_t verts = 0;
  for (auto f : complex.facet_masks()) verts |= f;
  bool ok = false;
  for (int v = 1; v <= complex.vertices() && !ok; ++v) {
    if (!(verts >> (v - 1) & 1)) continue;
    auto del = deletion(complex, {v});
    auto lk = link(complex, {v});
    if (!del.pure() || !lk.pure()) continue;
    if (vertex_decomposable_rec(del, memo) && vertex_decomposable_rec(lk, memo)) ok = true;
  }
  memo[key] = ok;
  return ok;
}

} // namespace

bool is_vertex_decomposable(const SimplicialComplex& complex) {
  require(complex.pure(), errc::unsupported, "vertex decomposability needs a pure complex");
  std::unordered_map<std::vector<std::uint32_t>, bool, MaskVecHash> memo;
  return vertex_decomposable_rec(complex, memo);
}

bool is_shifted_as_labeled(const SimplicialComplex& complex) {
  auto faces = complex.all_faces();
  std::unordered_set<std::uint32_t> face_set(faces.begin(), faces.end());
  for (auto f : faces) {
    for (int v = 1; v <= complex.vertices(); ++v) {
      if (!(f >> (v - 1) & 1)) continue;
      for (int w = 1; w < v; ++w) {
        if (f >> (w - 1) & 1) continue;
        std::uint32_t moved = (f & ~(1u << (v - 1))) | 1u << (w - 1);
        if (!face_set.count(moved)) return false;
      }
    }
  }
  return true;
}

ShiftedResult is_shifted(const SimplicialComplex& complex) {
  require(complex.pure(), errc::unsupported, "shiftedness test needs a pure complex");
  const int n = complex.vertices();
  require(n <= 8, errc::out_of_budget, "shiftedness search is guarded to n <= 8");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    // relabel: vertex v gets label perm[v-1]
    std::vector<std::vector<int>> facets;
    for (auto f : complex.facets()) {
      std::vector<int> g;
      for (int v : f) g.push_back(perm[static_cast<std::size_t>(v - 1)]);
      facets.push_back(std::move(g));
    }
    auto relabeled = SimplicialComplex::from_facets(n, std::move(facets));
    if (is_shifted_as_labeled(relabeled)) return ShiftedResult{true, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return ShiftedResult{false, std::nullopt};
}

EagonReinerReport eagon_reiner_check(const SimplicialComplex& complex, FieldSpec field) {
  require(complex.pure(), errc::unsupported, "Eagon-Reiner check needs a pure complex");
  EagonReinerReport report;
  if (complex.is_full_simplex()) {
    report.cm_over_field = true;
    report.dual_linear = true;
    report.agree = true;
    report.terai_equal = true;
    return report;
  }
  report.cm_over_field = complex_is_cm(complex, field);
  auto dual = dual_sr_ideal(complex);
  auto dual_table = oracle_betti(dual, field);
  report.dual_linear = dual_table.linear;
  report.agree = report.cm_over_field == report.dual_linear;

  auto sr = sr_ideal(complex);
  if (sr.ideal) {
    auto sr_table = oracle_betti(*sr.ideal, field);
    report.projdim_sr_ideal = sr_table.projdim_ideal;
    // reg(k[Δ^v]) = reg(S/I_{Δ^v}) = reg(I_{Δ^v}) - 1
    report.reg_dual_ring = dual_table.betti.regularity() - 1;
    report.terai_equal = report.projdim_sr_ideal == report.reg_dual_ring;
  } else {
    report.projdim_sr_ideal = 0;
    report.reg_dual_ring = 0;
    report.terai_equal = true;
  }
  return report;
}

} // namespace linquo
