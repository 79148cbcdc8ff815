#include <doctest.h>

#include "helpers.hpp"
#include "linquo/lexsegment.hpp"
#include "linquo/oracle.hpp"

using namespace linquo;
using linquo::testing::mono;

TEST_CASE("segments materialize the lex interval") {
  auto nine = build_segment(4, 3, mono(4, "x1*x2*x3"), mono(4, "x2*x3^2"));
  std::vector<std::string> expect = {"x1*x2*x3", "x1*x2*x4", "x1*x3^2", "x1*x3*x4",
                                     "x1*x4^2",  "x2^3",     "x2^2*x3", "x2^2*x4",
                                     "x2*x3^2"};
  REQUIRE(nine.gens.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(nine.gens[i].str() == expect[i]);

  auto five = build_segment(3, 3, mono(3, "x1*x2*x3"), mono(3, "x2*x3^2"));
  std::vector<std::string> expect5 = {"x1*x2*x3", "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2"};
  REQUIRE(five.gens.size() == 5);
  for (std::size_t i = 0; i < expect5.size(); ++i) CHECK(five.gens[i].str() == expect5[i]);

  auto point = build_segment(3, 2, mono(3, "x1*x3"), mono(3, "x1*x3"));
  CHECK(point.gens.size() == 1);

  CHECK_THROWS_AS((void)build_segment(3, 3, mono(3, "x2^3"), mono(3, "x1^3")), error);
  CHECK_THROWS_AS((void)build_segment(3, 3, mono(3, "x1*x2"), mono(3, "x2^3")), error);
}

TEST_CASE("shadows") {
  auto sh = shadow(3, {mono(3, "x1*x3^2"), mono(3, "x2^3")});
  std::vector<std::string> expect = {"x1^2*x3^2", "x1*x2^3", "x1*x2*x3^2",
                                     "x1*x3^3",   "x2^4",    "x2^3*x3"};
  REQUIRE(sh.monomials.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(sh.monomials[i].str() == expect[i]);
  CHECK(!sh.lexsegment);

  CHECK(shadow(3, {}).monomials.empty());

  // shadows of initial segments stay initial
  auto initial = initial_segment(4, 2, mono(4, "x1*x3"));
  for (int it = 1; it <= 3; ++it) {
    auto s = shadow(4, initial.gens, it);
    CHECK(s.lexsegment);
    CHECK(s.initial);
  }
}

TEST_CASE("classification of the worked segments") {
  auto a = build_segment(4, 3, mono(4, "x1*x3^2"), mono(4, "x2*x4^2"));
  auto ca = classify(a);
  CHECK(ca.completely);
  CHECK(ca.completely_tag == CompletelyTag::cond_b);

  auto b = build_segment(4, 3, mono(4, "x1*x3*x4"), mono(4, "x2*x4^2"));
  auto cb = classify(b);
  CHECK(!cb.completely);
  CHECK(cb.linear_resolution);
  CHECK(cb.linres_tag == LinResTag::noncompletely_shape);

  auto c = build_segment(3, 3, mono(3, "x1*x2*x3"), mono(3, "x2*x3^2"));
  auto cc = classify(c);
  CHECK(cc.completely);
  CHECK(cc.linear_resolution);
  CHECK(cc.linres_tag == LinResTag::cond_c);

  // the degree-4 example in six variables is not completely but has a
  // linear resolution
  auto d = build_segment(6, 4, mono(6, "x1*x3^2*x5"), mono(6, "x2*x6^3"));
  auto cd = classify(d);
  CHECK(!cd.completely);
  CHECK(cd.linear_resolution);

  CHECK_THROWS_AS((void)classify(build_segment(2, 1, mono(2, "x1"), mono(2, "x2"))), error);
}

TEST_CASE("quotient orders of the worked segments") {
  auto seg = build_segment(3, 3, mono(3, "x1*x2*x3"), mono(3, "x2*x3^2"));
  auto cert = quotient_order(seg);
  std::vector<std::string> expect = {"x2^3", "x2^2*x3", "x2*x3^2", "x1*x2*x3", "x1*x3^2"};
  REQUIRE(cert.order.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(cert.order[i].str() == expect[i]);
  CHECK(cert.sets == std::vector<std::vector<int>>{{}, {2}, {2}, {2, 3}, {2}});

  auto seg2 = build_segment(4, 3, mono(4, "x1*x3*x4"), mono(4, "x2*x4^2"));
  auto cert2 = quotient_order(seg2);
  std::vector<std::string> expect2 = {"x2^3",     "x2^2*x3", "x2^2*x4", "x2*x3^2",
                                      "x2*x3*x4", "x2*x4^2", "x1*x4^2", "x1*x3*x4"};
  REQUIRE(cert2.order.size() == expect2.size());
  for (std::size_t i = 0; i < expect2.size(); ++i) CHECK(cert2.order[i].str() == expect2[i]);

  auto point = build_segment(3, 2, mono(3, "x1*x3"), mono(3, "x1*x3"));
  CHECK(quotient_order(point).order.size() == 1);
}

TEST_CASE("dimension formula") {
  auto seg = build_segment(3, 3, mono(3, "x1*x2*x3"), mono(3, "x2*x3^2"));
  CHECK(krull_dim_formula(seg).dim == 1);
  CHECK(krull_dim_formula(seg).dim == krull_dim(seg.ideal()));

  auto whole = build_segment(3, 2, mono(3, "x1^2"), mono(3, "x3^2"));
  auto dw = krull_dim_formula(whole);
  CHECK(dw.dim == 0);
  CHECK(dw.is_power_of_max_ideal);

  auto tail = build_segment(3, 2, mono(3, "x1*x2"), mono(3, "x3^2"));
  CHECK(krull_dim_formula(tail).dim == 1);
  CHECK(krull_dim(tail.ideal()) == 1);
}

TEST_CASE("depth formula") {
  // final segments with x1 dividing u have depth zero
  auto fin = final_segment(4, 3, mono(4, "x1*x2*x4"));
  auto df = depth_formula(fin);
  CHECK(df.depth == 0);
  CHECK(df.depth_zero);

  auto a = build_segment(5, 2, mono(5, "x1*x4"), mono(5, "x2^2"));
  CHECK(depth_formula(a).depth == 2);
  CHECK(depth_formula(a).projdim_quotient == 3);

  auto c = build_segment(3, 3, mono(3, "x1*x3^2"), mono(3, "x2*x3^2"));
  CHECK(depth_formula(c).depth == 1);
}

TEST_CASE("Cohen-Macaulay classification") {
  auto a = build_segment(4, 2, mono(4, "x1*x4"), mono(4, "x2^2"));
  auto ca = is_cohen_macaulay(a);
  CHECK(ca.cohen_macaulay);
  CHECK(ca.matched == CMCase::case_a);
  CHECK(krull_dim_formula(a).dim == 2);
  CHECK(depth_formula(a).depth == 2);

  auto b = build_segment(3, 3, mono(3, "x1*x3^2"), mono(3, "x2*x3^2"));
  auto cb = is_cohen_macaulay(b);
  CHECK(cb.cohen_macaulay);
  CHECK(cb.matched == CMCase::case_b);

  // final segments of positive dimension are not Cohen-Macaulay
  auto fin = final_segment(4, 2, mono(4, "x1*x3"));
  CHECK(krull_dim_formula(fin).dim >= 1);
  CHECK(!is_cohen_macaulay(fin).cohen_macaulay);
}

TEST_CASE("division respects the maximal variable") {
  // m <= m' implies m / x_max(m) <= m' / x_max(m')
  for (int n = 2; n <= 5; ++n) {
    for (int d = 1; d <= 4; ++d) {
      auto stratum = monomials_of_degree(n, d);
      for (const auto& m1 : stratum) {
        for (const auto& m2 : stratum) {
          if (!lex_leq(m1, m2)) continue;
          auto q1 = m1.divide_by_variable(*m1.max_index());
          auto q2 = m2.divide_by_variable(*m2.max_index());
          CHECK(lex_leq(q1, q2));
        }
      }
    }
  }
}

TEST_CASE("the first variable never enters a prec-order quotient set") {
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 3; ++d) {
      auto stratum = monomials_of_degree(n, d);
      for (std::size_t ui = 0; ui < stratum.size(); ++ui) {
        for (std::size_t vi = ui; vi < stratum.size(); ++vi) {
          auto seg = build_segment(n, d, stratum[ui], stratum[vi]);
          auto cls = classify(seg);
          if (!cls.completely || !cls.linear_resolution) continue;
          auto cert = quotient_order(seg);
          for (const auto& set : cert.sets)
            for (int v : set) CHECK(v != 1);
        }
      }
    }
  }
}

TEST_CASE("small sweep against the oracle") {
  // the full-scale sweep runs in the acceptance suite; this covers n <= 4,
  // d <= 3 inline
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 3; ++d) {
      auto stratum = monomials_of_degree(n, d);
      for (std::size_t ui = 0; ui < stratum.size(); ++ui) {
        for (std::size_t vi = ui; vi < stratum.size(); ++vi) {
          auto seg = build_segment(n, d, stratum[ui], stratum[vi]);
          auto ideal = seg.ideal();
          CHECK(krull_dim_formula(seg).dim == krull_dim(ideal));
          auto [depth, projdim] = oracle_depth_projdim(ideal, FieldSpec::rationals());
          CHECK(depth_formula(seg).depth == depth);
          CHECK(is_cohen_macaulay(seg).cohen_macaulay ==
                (krull_dim(ideal) == depth));
          auto cls = classify(seg);
          CHECK(cls.linear_resolution ==
                oracle_betti(ideal, FieldSpec::rationals()).linear);
          CHECK(cls.completely == shadow(n, seg.gens, 1).lexsegment);
          if (cls.linear_resolution) CHECK(quotient_order(seg).order.size() == seg.gens.size());
        }
      }
    }
  }
}
