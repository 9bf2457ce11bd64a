#include "doctest.h"
#include "rootspace/cartan.hpp"
#include "rootspace/error.hpp"
#include "rootspace/json_io.hpp"
#include "rootspace/psp.hpp"
#include "rootspace/roots.hpp"
#include "rootspace/weights.hpp"

using namespace rootspace;

TEST_CASE("rationals are written as p/q") {
  CHECK(to_json(Rational(3)).get<std::string>() == "3/1");
  CHECK(to_json(Rational(-2, 4)).get<std::string>() == "-1/2");
  CHECK(rational_from_json(Json("6/-4")) == Rational(-3, 2));
  CHECK(rational_from_json(Json(5)) == Rational(5));
  CHECK_THROWS_AS(rational_from_json(Json("x")), Error);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), Error);
}

TEST_CASE("envelope and decomposition") {
  const auto c = build_cartan("A6");
  const auto rs = generate(c);
  const auto d = decompose(Root({1, 1, 1, 1, 1, 1}), c.mask_from_labels({2, 4, 5}), rs);
  Json j = envelope("psp decompose");
  CHECK(j["schema"] == "rootspace/1");
  const Json e = to_json(d);
  CHECK(e["gammas"].size() == 3);
  CHECK(e["partialSums"].size() == 3);
  CHECK(e["partialSums"].back() == Json({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("weights and points") {
  const auto c = build_cartan("A2");
  const HighestWeight l{{Rational(1), Rational(-1, 2)}};
  const Json w = weight_json(c, l, {1, 0});
  CHECK(w["depth"] == Json({1, 0}));
  CHECK(w["pairings"] == Json({"-1/1", "1/2"}));
  const auto pts = points_from_json(Json::parse(R"({"points": [[1, "1/2"], [0, 0]]})"));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0][1] == Rational(1, 2));
  CHECK(points_from_json(Json::parse("[[1, 2]]")).size() == 1);
  CHECK_THROWS_AS(points_from_json(Json::parse(R"({"nope": 1})")), Error);
}

TEST_CASE("output is deterministic") {
  const auto c = build_cartan("G2");
  const auto a = dump(to_json(generate(c).positive_roots()));
  const auto b = dump(to_json(generate(c).positive_roots()));
  CHECK(a == b);
  CHECK(a.back() == '\n');
}
