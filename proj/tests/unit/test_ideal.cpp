#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "linquo/ideal.hpp"
#include "linquo/lexsegment.hpp"

using namespace linquo;
using linquo::testing::ideal_of;
using linquo::testing::mono;

TEST_CASE("minimalize removes divisible generators") {
  auto ideal = ideal_of(2, {"x1^3", "x1*x2^2", "x1^3*x2"});
  REQUIRE(ideal.size() == 2);
  CHECK(ideal.gens()[0] == mono(2, "x1^3"));
  CHECK(ideal.gens()[1] == mono(2, "x1*x2^2"));

  auto single = ideal_of(3, {"x1*x2"});
  CHECK(single.size() == 1);

  // a 9-element lexsegment is already minimal and stays put
  auto seg = build_segment(4, 3, mono(4, "x1*x2*x3"), mono(4, "x2*x3^2"));
  auto ideal9 = MonomialIdeal::from_generators(4, seg.gens);
  CHECK(ideal9.gens() == seg.gens);

  CHECK_THROWS_AS((void)MonomialIdeal::from_generators(2, {}), error);
  CHECK_THROWS_AS((void)MonomialIdeal::from_generators(2, {Monomial::one(2)}), error);
}

TEST_CASE("canonical generators descend in lex") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto ideal = linquo::testing::random_ideal(4, 6, 4, rng);
    for (std::size_t i = 1; i < ideal.size(); ++i)
      CHECK(lex_greater(ideal.gens()[i - 1], ideal.gens()[i]));
    // idempotent
    CHECK(MonomialIdeal::from_generators(4, ideal.gens()) == ideal);
  }
}

TEST_CASE("intersection via pairwise lcms") {
  auto a = ideal_of(3, {"x1*x2"});
  auto b = ideal_of(3, {"x2*x3"});
  CHECK(intersect(a, b) == ideal_of(3, {"x1*x2*x3"}));

  auto i1 = ideal_of(8, {
      "x1*x2*x5*x6*x7*x8", "x2*x3*x5*x6*x7*x8", "x2^2*x3*x5*x6*x7", "x2^2*x3*x4*x6*x7",
      "x1*x2^2*x3*x6*x7", "x2*x3*x4*x5*x7*x8", "x2^2*x3*x4*x7*x8", "x1*x2*x3*x4*x7*x8",
      "x1^2*x3*x4*x7*x8", "x1^2*x3*x4*x5*x8", "x1*x3*x4*x6*x7*x8", "x1*x4*x5*x6*x7*x8",
      "x1^2*x4*x5*x6*x8", "x1^2*x2*x4*x5*x8"});
  auto i2 = ideal_of(8, {
      "x1*x2^2*x5*x6*x8", "x1*x2^2*x3*x6*x8", "x1^2*x2^2*x3*x6", "x1^2*x2^2*x5*x6",
      "x1^2*x2*x5*x6*x7", "x1^2*x2*x4*x5*x7", "x1^2*x2^2*x4*x5"});
  auto expected = ideal_of(8, {
      "x1*x2^2*x5*x6*x7*x8", "x1^2*x2*x5*x6*x7*x8", "x1^2*x2*x4*x5*x7*x8",
      "x1^2*x2^2*x4*x5*x8", "x1*x2^2*x3*x6*x7*x8", "x1^2*x2^2*x3*x6*x7"});
  CHECK(intersect(i1, i2) == expected);

  CHECK(intersect(i1, i1) == i1);
}

TEST_CASE("intersection properties on random pairs") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    auto a = linquo::testing::random_ideal(4, 4, 3, rng);
    auto b = linquo::testing::random_ideal(4, 4, 3, rng);
    auto c = linquo::testing::random_ideal(4, 3, 3, rng);
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
    // I cap J is contained in I: every generator is a member of I
    auto meet = intersect(a, b);
    for (const auto& g : meet.gens()) CHECK(a.contains(g));
  }
}

TEST_CASE("membership by divisibility") {
  auto ideal = ideal_of(4, {"x1^2*x2", "x1*x2^2", "x1*x2*x3", "x2*x3^2"});
  CHECK(ideal.contains(mono(4, "x1^2*x2^2*x3^2")));
  CHECK(!ideal.contains(Monomial::one(4)));
  for (const auto& g : ideal.gens()) CHECK(ideal.contains(g));
}

TEST_CASE("membership agrees with brute force divisibility") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 4); // up to 5
    auto ideal = linquo::testing::random_ideal(n, 1 + static_cast<int>(rng() % 6), 4, rng);
    for (int d = 0; d <= 6; ++d) {
      for (const auto& w : monomials_of_degree(n, d)) {
        bool direct = false;
        for (const auto& g : ideal.gens())
          if (g.divides(w)) direct = true;
        CHECK(ideal.contains(w) == direct);
      }
    }
  }
}

TEST_CASE("colon by a monomial") {
  auto ideal = ideal_of(3, {"x1^2*x2", "x2*x3^2"});
  CHECK(colon_by(ideal, mono(3, "x2")) == ideal_of(3, {"x1^2", "x3^2"}));
  // colon by a member gives the unit ideal, which is rejected
  CHECK_THROWS_AS((void)colon_by(ideal, mono(3, "x1^2*x2")), error);
}

TEST_CASE("radical, minimal primes and dimension") {
  auto fig1 = ideal_of(4, {"x1*x4", "x2*x4"});
  auto rad1 = radical_and_primes(fig1);
  CHECK(rad1.primes.primes == std::vector<std::vector<int>>{{4}, {1, 2}});
  CHECK(rad1.krull_dim_quotient == 3);

  auto square = ideal_of(1, {"x1^2"});
  auto rad2 = radical_and_primes(square);
  CHECK(rad2.radical == ideal_of(1, {"x1"}));
  CHECK(rad2.primes.primes == std::vector<std::vector<int>>{{1}});

  auto five = ideal_of(5, {"x1*x2", "x2*x3", "x3*x4", "x1*x4", "x3*x5", "x4*x5"});
  CHECK(krull_dim(five) == 2);
}

TEST_CASE("prime decomposition invariants on random ideals") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto ideal = linquo::testing::random_ideal(n, 1 + static_cast<int>(rng() % 5), 3, rng);
    auto rad = radical_and_primes(ideal);
    // radical is idempotent
    CHECK(radical_and_primes(rad.radical).radical == rad.radical);
    for (const auto& prime : rad.primes.primes) {
      // the prime contains the ideal
      for (const auto& g : ideal.gens()) {
        bool hits = false;
        for (int v : prime)
          if (g.exponent(v) > 0) hits = true;
        CHECK(hits);
      }
      // minimality: dropping any variable misses some generator
      for (int drop : prime) {
        bool still_covers = true;
        for (const auto& g : ideal.gens()) {
          bool hits = false;
          for (int v : prime)
            if (v != drop && g.exponent(v) > 0) hits = true;
          if (!hits) still_covers = false;
        }
        CHECK(!still_covers);
      }
    }
    // pairwise incomparable
    for (std::size_t i = 0; i < rad.primes.primes.size(); ++i)
      for (std::size_t j = 0; j < rad.primes.primes.size(); ++j)
        if (i != j)
          CHECK(!std::includes(rad.primes.primes[j].begin(), rad.primes.primes[j].end(),
                               rad.primes.primes[i].begin(), rad.primes.primes[i].end()));
  }
}
