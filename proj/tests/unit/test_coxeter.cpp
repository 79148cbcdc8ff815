#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "linquo/coxeter.hpp"
#include "linquo/oracle.hpp"
#include "linquo/simplicial.hpp"

using namespace linquo;

namespace {

CoxeterWord word_of(int m, std::initializer_list<int> letters) {
  return CoxeterWord{m, std::vector<int>(letters)};
}

Permutation fold(const CoxeterWord& w) {
  Permutation p = Permutation::identity(w.m);
  for (int letter : w.letters) p = p.right_multiply(letter);
  return p;
}

} // namespace

TEST_CASE("permutation basics") {
  auto pi = Permutation::from_cycles(4, "(1 2 4)");
  CHECK(pi.one_line() == std::vector<int>{2, 4, 3, 1});
  CHECK(pi.length() == 4);
  CHECK(Permutation::identity(4).length() == 0);
  CHECK(Permutation::from_cycles(4, "(1 4)(2 3)").one_line() == std::vector<int>{4, 3, 2, 1});
  CHECK(pi.compose(pi.inverse()).is_identity());
  CHECK_THROWS_AS((void)Permutation::from_one_line({1, 1, 2}), error);
}

TEST_CASE("reduced words of the worked permutation") {
  auto pi = Permutation::from_cycles(4, "(1 2 4)");
  auto words = reduced_words(pi);
  std::set<std::vector<int>> seen(words.begin(), words.end());
  CHECK(seen == std::set<std::vector<int>>{{1, 2, 3, 2}, {1, 3, 2, 3}, {3, 1, 2, 3}});
  for (const auto& w : words) {
    CHECK(static_cast<int>(w.size()) == pi.length());
    CHECK(fold(CoxeterWord{4, w}) == pi);
  }
  CHECK(reduced_words(Permutation::identity(3)) ==
        std::vector<std::vector<int>>{{}});
  auto s2 = Permutation::transposition(3, 2, 3);
  CHECK(reduced_words(s2) == std::vector<std::vector<int>>{{2}});
}

TEST_CASE("reduced word counts on random permutations") {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> v{1, 2, 3, 4, 5};
    std::shuffle(v.begin(), v.end(), rng);
    auto pi = Permutation::from_one_line(v);
    for (const auto& w : reduced_words(pi)) {
      CHECK(static_cast<int>(w.size()) == pi.length());
      CHECK(fold(CoxeterWord{5, w}) == pi);
    }
  }
}

TEST_CASE("Demazure products") {
  auto s1 = Permutation::transposition(2, 1, 2);
  CHECK(demazure_product(word_of(2, {1})) == s1);
  CHECK(demazure_product(word_of(2, {1, 1})) == s1);
  CHECK(demazure_product(word_of(4, {})) == Permutation::identity(4));
  CHECK(demazure_product(word_of(4, {2, 3, 2, 3, 1, 3, 2, 3, 2})) ==
        Permutation::from_cycles(4, "(1 4)(2 3)"));
}

TEST_CASE("Demazure product dominates every subword in Bruhat order") {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 60; ++t) {
    int m = 3 + static_cast<int>(rng() % 2);
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> letters;
    for (int k = 0; k < n; ++k)
      letters.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m - 1)));
    CoxeterWord word{m, letters};
    auto delta = demazure_product(word);
    // delta(P) >= pi in Bruhat order exactly when the word contains pi
    std::vector<int> one_line(static_cast<std::size_t>(m));
    std::iota(one_line.begin(), one_line.end(), 1);
    std::sort(one_line.begin(), one_line.end());
    do {
      auto pi = Permutation::from_one_line(one_line);
      CHECK(word_contains(word, pi) == bruhat_leq(pi, delta));
    } while (std::next_permutation(one_line.begin(), one_line.end()));
  }
}

TEST_CASE("the size-8 subword complex") {
  CoxeterWord word{4, {1, 2, 1, 3, 1, 2, 3, 1}};
  auto pi = Permutation::from_cycles(4, "(1 2 4)");
  auto report = subword_complex(word, pi);
  REQUIRE(!report.empty_complex);
  CHECK(report.representing ==
        std::vector<std::vector<int>>{{1, 2, 4, 6}, {1, 4, 6, 7}, {3, 4, 6, 7}, {4, 5, 6, 7}});
  CHECK(report.facets ==
        std::vector<std::vector<int>>{{3, 5, 7, 8}, {2, 3, 5, 8}, {1, 2, 5, 8}, {1, 2, 3, 8}});
  CHECK(report.certificate->sets ==
        std::vector<std::vector<int>>{{}, {2}, {1}, {1, 3}});
  CHECK(report.d_values == std::vector<int>{0, 1, 1, 2});

  // the certificate order is a shelling of the complex
  auto complex = SimplicialComplex::from_facets(8, report.facets);
  std::vector<int> order;
  auto facets = complex.facets();
  for (const auto& f : report.facets) {
    auto it = std::find(facets.begin(), facets.end(), f);
    order.push_back(static_cast<int>(it - facets.begin()));
  }
  CHECK(shelling_order_valid(complex, order));

  auto bounds = bounds_report(report);
  CHECK(bounds.projdim_dual == 2);
  CHECK(bounds.projdim_dual_bound == 4);
  CHECK(bounds.projdim_sr_ring == 4);
  CHECK(!special_class_analysis(report).has_value());
}

TEST_CASE("the size-7 ladder of quotient sizes") {
  CoxeterWord word{4, {1, 1, 1, 3, 1, 2, 3}};
  auto pi = Permutation::from_cycles(4, "(1 2 4)");
  auto report = subword_complex(word, pi);
  REQUIRE(!report.empty_complex);
  std::vector<std::string> expect = {"x1*x4*x6*x7", "x2*x4*x6*x7", "x3*x4*x6*x7",
                                     "x4*x5*x6*x7"};
  REQUIRE(report.certificate->order.size() == 4);
  for (std::size_t i = 0; i < expect.size(); ++i)
    CHECK(report.certificate->order[i].str() == expect[i]);
  CHECK(report.d_values == std::vector<int>{0, 1, 2, 3});
  auto bounds = bounds_report(report);
  CHECK(bounds.projdim_dual == 3);
  CHECK(bounds.projdim_dual_bound == 3);
  auto sc = special_class_analysis(report);
  REQUIRE(sc.has_value());
  CHECK(sc->sphere); // r = 4 = n - ell(pi) + 1
  CHECK(demazure_product(word) == pi);
}

TEST_CASE("the size-6 complex is not shifted") {
  CoxeterWord word{4, {1, 3, 3, 1, 2, 3}};
  auto pi = Permutation::from_cycles(4, "(1 2 4)");
  auto report = subword_complex(word, pi);
  REQUIRE(!report.empty_complex);
  CHECK(report.facets ==
        std::vector<std::vector<int>>{{3, 4}, {2, 4}, {1, 3}, {1, 2}});
  auto complex = SimplicialComplex::from_facets(6, report.facets);
  // the two printed exchange arguments: either relative labeling fails
  CHECK(!complex.is_face(std::vector<int>{1, 4}));
  CHECK(!complex.is_face(std::vector<int>{2, 3}));
  CHECK(complex.is_face(std::vector<int>{3, 4}));
  CHECK(complex.is_face(std::vector<int>{1, 2}));
  CHECK(!is_shifted(complex).shifted);
}

TEST_CASE("the size-9 special class member") {
  CoxeterWord word{4, {2, 3, 2, 3, 1, 3, 2, 3, 2}};
  auto pi = Permutation::from_cycles(4, "(1 4)(2 3)");
  REQUIRE(pi.length() == 6);
  auto report = subword_complex(word, pi);
  REQUIRE(!report.empty_complex);
  std::vector<std::string> expect = {"x1*x2*x3*x5*x7*x8", "x2*x3*x4*x5*x7*x8",
                                     "x2*x3*x5*x6*x7*x8", "x2*x3*x5*x7*x8*x9"};
  REQUIRE(report.certificate->order.size() == 4);
  for (std::size_t i = 0; i < expect.size(); ++i)
    CHECK(report.certificate->order[i].str() == expect[i]);
  CHECK(report.d_values == std::vector<int>{0, 1, 2, 3});

  auto sc = special_class_analysis(report);
  REQUIRE(sc.has_value());
  CHECK(sc->r == 4);
  CHECK(sc->unique_l == 9);
  CHECK(sc->sphere);
  CHECK(sc->height_dual == 1);
  // closed form equals brute-force Demazure enumeration
  CHECK(sc->k_polynomial == kpolynomial_brute_force(word, pi));
  // complete intersection form of the Stanley-Reisner ideal
  auto complex = SimplicialComplex::from_facets(9, report.facets);
  auto sr = sr_ideal(complex);
  REQUIRE(sr.ideal.has_value());
  CHECK(*sr.ideal == MonomialIdeal::from_generators(9, sc->sr_complete_intersection));
  // and the dual Betti table matches the binomials
  CHECK(oracle_betti(*report.dual_ideal, FieldSpec::rationals()).betti == sc->betti);
  // the facets triangulate a two-sphere: the tetrahedron boundary
  CHECK(sphere_or_ball(word, pi) == SphereVerdict::sphere);
  auto h = homology(complex, FieldSpec::rationals());
  CHECK(h.reduced(2) == 1);
  CHECK(h.reduced(1) == 0);
  CHECK(h.reduced(0) == 0);
}

TEST_CASE("repeated-letter words land in the special class") {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 20; ++t) {
    int m = 3 + static_cast<int>(rng() % 2);
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    auto pi = Permutation::from_one_line(v);
    if (pi.length() == 0) continue;
    auto base = reduced_words(pi).front();
    int i = static_cast<int>(rng() % base.size());
    int copies = 1 + static_cast<int>(rng() % 3);
    std::vector<int> letters;
    for (std::size_t k = 0; k < base.size(); ++k) {
      letters.push_back(base[k]);
      if (static_cast<int>(k) == i)
        for (int c = 0; c < copies; ++c) letters.push_back(base[k]);
    }
    CoxeterWord word{m, letters};
    auto report = subword_complex(word, pi);
    REQUIRE(!report.empty_complex);
    int n = word.size();
    int N = n - pi.length() + 1;
    CHECK(static_cast<int>(report.representing.size()) == N);
    CHECK(report.d_values.back() == N - 1);
    auto sc = special_class_analysis(report);
    CHECK(sc.has_value());
    if (sc) {
      CHECK(sc->sphere);
      // subword counts by size follow the binomials
      auto kb = kpolynomial_brute_force(word, pi);
      CHECK(kb == sc->k_polynomial);
      for (int j = 0; j < N; ++j) {
        long long count = kb.coefficient(pi.length() + j);
        if (j % 2 == 1) count = -count;
        CHECK(count == static_cast<long long>(binomial(
                           static_cast<std::uint64_t>(N),
                           static_cast<std::uint64_t>(j + 1))));
      }
    }
  }
}

TEST_CASE("facet purity and the quotient invariants on random words") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 120; ++t) {
    int m = 3 + static_cast<int>(rng() % 3); // up to 5
    int n = 2 + static_cast<int>(rng() % 9); // up to 10
    std::vector<int> letters;
    for (int k = 0; k < n; ++k)
      letters.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m - 1)));
    CoxeterWord word{m, letters};
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    auto pi = Permutation::from_one_line(v);
    if (pi.is_identity()) continue;
    auto report = subword_complex(word, pi);
    if (report.empty_complex) continue;
    // every facet has size n - ell(pi)
    for (const auto& f : report.facets)
      CHECK(static_cast<int>(f.size()) == n - pi.length());
    // the lex order certificate always exists and matches the min formula
    CHECK(report.certificate.has_value());
    CHECK(report.min_formula_sets == report.certificate->sets);
    auto bounds = bounds_report(report);
    CHECK(bounds.projdim_dual <= bounds.projdim_dual_bound);
    // sphere verdicts agree with the reduced homology of the complex
    if (n <= 10) {
      auto complex = SimplicialComplex::from_facets(n, report.facets);
      bool sphere = sphere_or_ball(word, pi) == SphereVerdict::sphere;
      int d = complex.is_irrelevant() ? -1 : complex.dim();
      auto h = homology(complex, FieldSpec::rationals());
      CHECK(h.reduced(d) == (sphere ? 1 : 0));
    }
  }
}

TEST_CASE("degenerate and error paths") {
  // a single reduced word: the complex is {?} and a sphere
  CoxeterWord word{4, {1, 2, 3, 2}};
  auto pi = Permutation::from_cycles(4, "(1 2 4)");
  auto report = subword_complex(word, pi);
  REQUIRE(!report.empty_complex);
  CHECK(report.representing.size() == 1);
  CHECK(report.facets == std::vector<std::vector<int>>{{}});
  CHECK(sphere_or_ball(word, pi) == SphereVerdict::sphere);
  auto bounds = bounds_report(report);
  CHECK(bounds.projdim_dual == 0);

  // a ball: one extra letter that bumps the Demazure product
  CoxeterWord longer{4, {1, 2, 3, 2, 1}};
  CHECK(demazure_product(longer) != pi);
  CHECK(word_contains(longer, pi));
  CHECK(sphere_or_ball(longer, pi) == SphereVerdict::ball);

  // words that do not contain the element
  CoxeterWord tiny{4, {1, 2}};
  CHECK(subword_complex(tiny, pi).empty_complex);
  CHECK_THROWS_AS((void)sphere_or_ball(tiny, pi), error);
}
