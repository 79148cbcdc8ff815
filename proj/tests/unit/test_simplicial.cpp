#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "linquo/oracle.hpp"
#include "linquo/simplicial.hpp"
#include "linquo/sweeps.hpp"

using namespace linquo;
using linquo::testing::ideal_of;

namespace {

SimplicialComplex cx(int n, std::initializer_list<std::initializer_list<int>> facets) {
  std::vector<std::vector<int>> fs;
  for (auto f : facets) fs.emplace_back(f);
  return SimplicialComplex::from_facets(n, std::move(fs));
}

const std::vector<std::vector<int>> rp2_facets = {
    {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
    {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};

} // namespace

TEST_CASE("Stanley-Reisner and facet ideals of the two-facet complex") {
  auto complex = cx(4, {{1, 2, 3}, {3, 4}});
  auto sr = sr_ideal(complex);
  REQUIRE(sr.ideal.has_value());
  CHECK(*sr.ideal == ideal_of(4, {"x1*x4", "x2*x4"}));
  CHECK(facet_ideal(complex) == ideal_of(4, {"x1*x2*x3", "x3*x4"}));
  // primary decomposition: the minimal primes are the facet complements
  auto rad = radical_and_primes(*sr.ideal);
  CHECK(rad.primes.primes == std::vector<std::vector<int>>{{4}, {1, 2}});
  // dim k[Delta] = dim Delta + 1
  CHECK(rad.krull_dim_quotient == complex.dim() + 1);

  auto full = SimplicialComplex::full_simplex(3);
  CHECK(sr_ideal(full).full_simplex);
}

TEST_CASE("Alexander duals") {
  auto complex = cx(4, {{1, 2, 3}, {3, 4}, {1, 4}});
  CHECK(dual_sr_ideal(complex) == ideal_of(4, {"x4", "x2*x3", "x1*x2"}));
  auto dual = alexander_dual(complex);
  CHECK(dual == cx(4, {{2}, {1, 3}}));
  CHECK(alexander_dual(dual) == complex);
  CHECK_THROWS_AS((void)alexander_dual(SimplicialComplex::full_simplex(3)), error);
}

TEST_CASE("duality is an involution on random complexes") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 500; ++t) {
    int n = 2 + static_cast<int>(rng() % 6); // up to 7
    auto complex = random_pure_complex(n, rng());
    if (complex.is_full_simplex()) continue;
    CHECK(alexander_dual(alexander_dual(complex)) == complex);
    // the minimal primes of the Stanley-Reisner ideal are the facet
    // complements
    auto sr = sr_ideal(complex);
    auto primes = radical_and_primes(*sr.ideal).primes.primes;
    std::vector<std::vector<int>> complements;
    for (const auto& f : complex.facets()) {
      std::vector<int> comp;
      for (int v = 1; v <= n; ++v)
        if (std::find(f.begin(), f.end(), v) == f.end()) comp.push_back(v);
      complements.push_back(std::move(comp));
    }
    std::sort(complements.begin(), complements.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    CHECK(primes == complements);
  }
}

TEST_CASE("dual intersection identity") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 200; ++t) {
    int n = 3 + static_cast<int>(rng() % 3);
    auto d1 = random_pure_complex(n, rng());
    auto d2 = random_pure_complex(n, rng());
    if (d1.is_full_simplex() || d2.is_full_simplex()) continue;
    auto meet = complex_intersection(d1, d2);
    if (meet.is_void()) continue;
    CHECK(intersect(dual_sr_ideal(d1), dual_sr_ideal(d2)) == dual_sr_ideal(meet));
  }
}

TEST_CASE("links and deletions") {
  auto complex = cx(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
  CHECK(deletion(complex, {1, 3}) == cx(5, {{2, 4}, {4, 5}}));
  CHECK(link(complex, {1, 3}) == cx(5, {{2}}));
  CHECK(link(complex, {}) == complex);
  CHECK_THROWS_AS((void)link(complex, {1, 5}), error);
  // deleting a vertex of a simplex leaves the opposite face
  auto simplex = SimplicialComplex::full_simplex(4);
  CHECK(deletion(simplex, {2}) == cx(4, {{1, 3, 4}}));
}

TEST_CASE("homology of spheres cones and the projective plane") {
  auto circle = cx(3, {{1, 2}, {1, 3}, {2, 3}});
  auto h = homology(circle, FieldSpec::rationals());
  CHECK(h.reduced(-1) == 0);
  CHECK(h.reduced(0) == 0);
  CHECK(h.reduced(1) == 1);

  auto cone = cx(4, {{1, 2, 4}, {1, 3, 4}, {2, 3, 4}}); // cone over the circle
  auto hc = homology(cone, FieldSpec::rationals());
  for (int i = -1; i <= 2; ++i) CHECK(hc.reduced(i) == 0);

  auto empty = SimplicialComplex::empty_complex(2);
  CHECK(homology(empty, FieldSpec::rationals()).reduced(-1) == 1);

  auto rp2 = SimplicialComplex::from_facets(6, rp2_facets);
  auto hq = homology(rp2, FieldSpec::rationals());
  CHECK(hq.reduced(1) == 0);
  CHECK(hq.reduced(2) == 0);
  auto h2 = homology(rp2, FieldSpec::prime(2));
  CHECK(h2.reduced(1) == 1);
  CHECK(h2.reduced(2) == 1);
}

TEST_CASE("Reisner criterion distinguishes characteristics on the projective plane") {
  auto rp2 = SimplicialComplex::from_facets(6, rp2_facets);
  CHECK(complex_is_cm(rp2, FieldSpec::rationals()));
  CHECK(complex_is_cm(rp2, FieldSpec::prime(3)));
  CHECK(!complex_is_cm(rp2, FieldSpec::prime(2)));

  auto disconnected = cx(4, {{1, 2}, {3, 4}});
  CHECK(!complex_is_cm(disconnected, FieldSpec::rationals()));
}

TEST_CASE("shellability") {
  auto fan = cx(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
  auto shelling = is_shellable(fan);
  REQUIRE(shelling.status == SearchStatus::found);
  CHECK(shelling_order_valid(fan, shelling.order));

  auto disconnected = cx(4, {{1, 2}, {3, 4}});
  CHECK(is_shellable(disconnected).status == SearchStatus::none);

  auto single = cx(3, {{1, 2, 3}});
  CHECK(is_shellable(single).status == SearchStatus::found);

  auto nonpure = cx(4, {{1, 2, 3}, {3, 4}});
  CHECK_THROWS_AS((void)is_shellable(nonpure), error);
}

TEST_CASE("vertex decomposability") {
  CHECK(is_vertex_decomposable(cx(4, {{1, 2, 3}, {1, 3, 4}})));
  // the four-cycle is vertex-decomposable but not shifted
  auto cycle = cx(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  CHECK(is_vertex_decomposable(cycle));
  CHECK(!is_shifted(cycle).shifted);
  CHECK(!is_vertex_decomposable(cx(4, {{1, 2}, {3, 4}})));
}

TEST_CASE("shiftedness") {
  auto triangle = cx(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(is_shifted(triangle).shifted);
  auto path = cx(3, {{1, 2}, {1, 3}});
  CHECK(is_shifted(path).shifted);
  CHECK(is_shifted_as_labeled(path));
}

TEST_CASE("Eagon-Reiner and Terai on the named complexes") {
  auto fan = cx(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
  auto er = eagon_reiner_check(fan, FieldSpec::rationals());
  CHECK(er.cm_over_field);
  CHECK(er.dual_linear);
  CHECK(er.agree);
  CHECK(er.terai_equal);

  auto disconnected = cx(4, {{1, 2}, {3, 4}});
  auto er2 = eagon_reiner_check(disconnected, FieldSpec::rationals());
  CHECK(!er2.cm_over_field);
  CHECK(!er2.dual_linear);
  CHECK(er2.agree);
  CHECK(er2.terai_equal);
}

TEST_CASE("hierarchy holds on random pure complexes") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 60; ++t) {
    int n = 3 + static_cast<int>(rng() % 3);
    auto complex = random_pure_complex(n, rng());
    bool shifted = is_shifted(complex).shifted;
    bool vd = is_vertex_decomposable(complex);
    bool shellable = is_shellable(complex).status == SearchStatus::found;
    bool cm = complex_is_cm(complex, FieldSpec::rationals());
    if (shifted) CHECK(vd);
    if (vd) CHECK(shellable);
    if (shellable) CHECK(cm);
  }
}
