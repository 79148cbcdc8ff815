#include <doctest.h>

#include "helpers.hpp"
#include "linquo/json_io.hpp"

using namespace linquo;
using linquo::testing::ideal_of;
using linquo::testing::mono;

TEST_CASE("ideal JSON round trip") {
  auto ideal = ideal_of(4, {"x1*x2*x3", "x3*x4"});
  auto j = to_json(ideal);
  CHECK(j["n"] == 4);
  CHECK(j["gens"].size() == 2);
  CHECK(ideal_from_json(j) == ideal);

  Json raw = Json::parse(R"({"n": 4, "gens": ["x1*x2*x3", "x3*x4"]})");
  CHECK(ideal_from_json(raw) == ideal);

  CHECK_THROWS_AS((void)ideal_from_json(Json::parse(R"({"n": 2})")), error);
  CHECK_THROWS_AS((void)ideal_from_json(Json::parse(R"({"n": 2, "gens": []})")), error);
  CHECK_THROWS_AS((void)ideal_from_json(Json::parse(R"({"n": 2, "gens": ["x5"]})")), error);
}

TEST_CASE("complex JSON round trip") {
  auto complex = SimplicialComplex::from_facets(4, {{1, 2, 3}, {3, 4}});
  auto j = to_json(complex);
  CHECK(complex_from_json(j) == complex);
  Json raw = Json::parse(R"({"n": 4, "facets": [[1,2,3],[3,4]]})");
  CHECK(complex_from_json(raw) == complex);
}

TEST_CASE("constructibility certificate JSON round trip") {
  auto ideal = ideal_of(2, {"x1^2", "x1*x2"});
  auto found = search_constructible(ideal);
  REQUIRE(found.status == Constructibility::found);
  auto j = certificate_to_json(*found.certificate);
  auto back = certificate_from_json(2, j);
  CHECK(verify_certificate(ideal, back).valid);
  CHECK(j.contains("split"));
  CHECK(j.contains("intersection"));
}

TEST_CASE("certificate and failure serialization") {
  auto ideal = ideal_of(4, {"x1^2*x2", "x1*x2^2", "x1*x2*x3", "x2*x3^2"});
  auto res = check_order(ideal, ideal.gens());
  auto cert = std::get<QuotientCertificate>(res);
  auto j = to_json(cert);
  CHECK(j["order"].size() == 4);
  CHECK(j["sets"][2] == Json::array({1, 2}));

  auto seg_ideal = ideal_of(3, {"x1*x2*x3", "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2"});
  auto bad = check_order(seg_ideal, seg_ideal.gens());
  auto failure = std::get<QuotientFailure>(bad);
  auto fj = to_json(failure);
  CHECK(fj["failed_at"] == 3);
  CHECK(fj["colon"][0] == "x1*x3");
}

TEST_CASE("betti table and resolution serialization") {
  auto ideal = ideal_of(3, {"x1^2", "x1*x2^2", "x1*x2*x3", "x2^3"});
  auto res = ek_resolution(ideal);
  auto j = to_json(res);
  CHECK(j["target"] == "ideal");
  CHECK(j["modules"].size() == 3);
  CHECK(j.contains("augmentation"));
  auto report = verify_complex(res);
  auto bj = to_json(report.betti_of_ideal);
  CHECK(bj["projdim"] == 2);
  CHECK(bj["linear"] == false); // degrees 2 and 3 mix
}
