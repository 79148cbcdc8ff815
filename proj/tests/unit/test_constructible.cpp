#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "linquo/constructible.hpp"
#include "linquo/oracle.hpp"
#include "linquo/sweeps.hpp"

using namespace linquo;
using linquo::testing::ideal_of;
using linquo::testing::mono;

namespace {

ConstructibilityCertificate cert_of(const MonomialIdeal& ideal) {
  auto result = search_constructible(ideal);
  REQUIRE(result.status == Constructibility::found);
  return *result.certificate;
}

} // namespace

TEST_CASE("principal ideals verify as leaves") {
  auto ideal = ideal_of(3, {"x1*x2^2"});
  ConstructibilityCertificate cert{3, ConstructibilityCertificate::make_leaf(mono(3, "x1*x2^2"))};
  CHECK(verify_certificate(ideal, cert).valid);
  auto betti = constructible_betti(ideal, cert);
  CHECK(betti.at(0, 3) == 1);
  CHECK(betti.entries().size() == 1);
}

TEST_CASE("tampered certificates fail verification") {
  auto ideal = ideal_of(2, {"x1^2", "x1*x2"});
  auto good = cert_of(ideal);
  CHECK(verify_certificate(ideal, good).valid);
  // swap the recorded intersection for a wrong one
  ConstructibilityCertificate bad{
      2, ConstructibilityCertificate::make_split(
             good.root->left, good.root->right,
             ConstructibilityCertificate::make_leaf(mono(2, "x1^2*x2^2")))};
  auto check = verify_certificate(ideal, bad);
  CHECK(!check.valid);
  CHECK(check.failing_node == "root");
}

TEST_CASE("linear quotients ideals are constructible with matching Betti tables") {
  std::mt19937_64 rng(67);
  int tested = 0;
  while (tested < 40) {
    int n = 2 + static_cast<int>(rng() % 3);
    int d = 2 + static_cast<int>(rng() % 2);
    auto stratum = monomials_of_degree(n, d);
    std::shuffle(stratum.begin(), stratum.end(), rng);
    std::size_t keep = std::min<std::size_t>(stratum.size(), 2 + rng() % 4);
    stratum.erase(stratum.begin() + static_cast<long>(keep), stratum.end());
    auto ideal = MonomialIdeal::from_generators(n, stratum);
    auto found = find_order(ideal);
    if (found.status != SearchStatus::found) continue;
    ++tested;
    auto result = search_constructible(ideal);
    REQUIRE(result.status == Constructibility::found);
    CHECK(verify_certificate(ideal, *result.certificate).valid);
    auto split_betti = constructible_betti(ideal, *result.certificate);
    CHECK(split_betti == betti_from_certificate(*found.certificate));
    CHECK(split_betti == oracle_betti(ideal, FieldSpec::rationals()).betti);
    // found ideals have linear resolutions
    CHECK(oracle_betti(ideal, FieldSpec::rationals()).linear);
  }
}

TEST_CASE("ideal-level and complex-level constructibility agree at desk scale") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 80; ++t) {
    int n = 3 + static_cast<int>(rng() % 3); // up to 5
    auto complex = random_pure_complex(n, rng());
    if (complex.is_full_simplex()) continue;
    if (complex.facet_count() > 8) continue;
    auto dual = dual_sr_ideal(complex);
    auto by_ideal = search_constructible(dual, 500000);
    auto by_complex = complex_constructible(complex, 500000);
    if (by_ideal.status == Constructibility::unknown ||
        by_complex == Constructibility::unknown)
      continue;
    CHECK((by_ideal.status == Constructibility::found) ==
          (by_complex == Constructibility::found));
  }
}

TEST_CASE("polarization of powers") {
  auto p = polarize(ideal_of(2, {"x1^2*x2"}));
  CHECK(p.ideal.vars() == 3);
  CHECK(p.ideal == ideal_of(3, {"x1*x2*x3"}));
  CHECK(p.ideal.is_squarefree());

  auto q = polarize(ideal_of(2, {"x1^3", "x1*x2^2"}));
  CHECK(q.ideal.vars() == 5);
  CHECK(q.ideal.size() == 2);
  CHECK(q.ideal.is_squarefree());
}

TEST_CASE("polarization preserves and reflects linear quotients") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto ideal = linquo::testing::random_ideal(n, 2 + static_cast<int>(rng() % 4), 3, rng);
    auto p = polarize(ideal);
    auto order = ideal.gens();
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Monomial> image;
    for (const auto& g : order) image.push_back(polarize_monomial(g, p));
    bool before = std::holds_alternative<QuotientCertificate>(check_order(ideal, order));
    bool after = std::holds_alternative<QuotientCertificate>(check_order(p.ideal, image));
    CHECK(before == after);
  }
}

TEST_CASE("colon stays prime through polarization") {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto ideal = linquo::testing::random_ideal(n, 2 + static_cast<int>(rng() % 4), 3, rng);
    auto u = linquo::testing::random_monomial(n, 3, rng);
    if (ideal.contains(u)) continue;
    auto p = polarize(ideal);
    Monomial pu = Monomial::one(p.ideal.vars());
    bool representable = true;
    try {
      pu = polarize_monomial(u, p);
    } catch (const error&) {
      representable = false; // u uses higher powers than the table provides
    }
    if (!representable) continue;
    auto is_prime = [](const MonomialIdeal& c) {
      for (const auto& g : c.gens())
        if (g.degree() != 1) return false;
      return true;
    };
    bool before, after;
    try {
      before = is_prime(colon_by(ideal, u));
    } catch (const error&) {
      continue;
    }
    after = is_prime(colon_by(p.ideal, pu));
    CHECK(before == after);
  }
}

TEST_CASE("Hachimori split: a constructible dual ideal without linear quotients") {
  // two shellable halves of a ten-vertex complex (vertex labels shifted up
  // by one) and their printed one-dimensional intersection
  std::vector<std::vector<int>> half1 = {
      {1, 4, 10}, {3, 4, 10}, {3, 9, 10}, {3, 4, 9}, {1, 4, 9}, {1, 8, 9}, {1, 4, 8},
      {3, 4, 8},  {3, 7, 8},  {6, 7, 8},  {6, 8, 9}, {5, 6, 9}, {5, 9, 10}, {1, 5, 10}};
  std::vector<std::vector<int>> half2 = {
      {1, 2, 5}, {2, 3, 5}, {3, 5, 6}, {2, 3, 6}, {1, 2, 6}, {1, 6, 7}, {1, 2, 7}, {2, 3, 7}};
  auto d1 = SimplicialComplex::from_facets(10, half1);
  auto d2 = SimplicialComplex::from_facets(10, half2);
  auto i1 = dual_sr_ideal(d1);
  auto i2 = dual_sr_ideal(d2);
  REQUIRE(i1.size() == 14);
  REQUIRE(i2.size() == 8);
  // both halves are shellable, so the dual ideals have linear quotients
  auto f1 = find_order(i1);
  auto f2 = find_order(i2);
  REQUIRE(f1.status == SearchStatus::found);
  REQUIRE(f2.status == SearchStatus::found);
  auto inter = intersect(i1, i2);
  auto printed_inter = ideal_of(10, {"x2*x3*x4*x6*x7*x8*x9*x10", "x1*x2*x3*x4*x7*x8*x9*x10",
                                     "x1*x2*x3*x4*x5*x8*x9*x10", "x1*x2*x4*x5*x6*x8*x9*x10"});
  CHECK(inter == printed_inter);
  auto fi = find_order(inter);
  REQUIRE(fi.status == SearchStatus::found);

  // assemble the certificate for the union ideal
  auto whole = sum(i1, i2);
  auto c1 = search_constructible(i1);
  auto c2 = search_constructible(i2);
  auto ci = search_constructible(inter);
  REQUIRE(c1.status == Constructibility::found);
  REQUIRE(c2.status == Constructibility::found);
  REQUIRE(ci.status == Constructibility::found);
  ConstructibilityCertificate cert{
      10, ConstructibilityCertificate::make_split(c1.certificate->root, c2.certificate->root,
                                                  ci.certificate->root)};
  CHECK(verify_certificate(whole, cert).valid);
  CHECK(constructible_betti(whole, cert) ==
        oracle_betti(whole, FieldSpec::prime(32003)).betti);
  // the union complex is not shellable, so no linear quotients order can
  // turn up within any budget
  auto fw = find_order(whole, 500000);
  CHECK(fw.status != SearchStatus::found);
}

TEST_CASE("non-equigenerated input is rejected") {
  CHECK_THROWS_AS((void)search_constructible(ideal_of(2, {"x1", "x2^2"})), error);
}
