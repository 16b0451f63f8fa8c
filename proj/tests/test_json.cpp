#include <doctest.h>

#include "thetalift/json_io.hpp"

using namespace thetalift;

TEST_CASE("series JSON uses exact decimal strings in (q, z2) order") {
  const FJSeries f(2, 5, {{3, ZetaPoly({{2, frac(-7, 3)}, {-4, Rational("123456789012345678901234567890")}})},
                          {-1, ZetaPoly::constant(1)}});
  const Json j = to_json(f);
  CHECK(j["qden"] == 2);
  CHECK(j["trunc"] == 5);
  REQUIRE(j["terms"].size() == 3);
  CHECK(j["terms"][0]["q"] == -1);
  CHECK(j["terms"][1]["z2"] == -4);
  CHECK(j["terms"][1]["num"] == "123456789012345678901234567890");
  CHECK(j["terms"][2]["num"] == "-7");
  CHECK(j["terms"][2]["den"] == "3");
  CHECK(fjseries_from_json(j) == f);
  CHECK(to_json(fjseries_from_json(j)).dump() == j.dump());
}

TEST_CASE("malformed series JSON is rejected") {
  CHECK_THROWS_AS(fjseries_from_json(Json::parse(R"({"qden": 1})")), Error);
  CHECK_THROWS_AS(fjseries_from_json(Json::parse(
                      R"({"qden": 1, "trunc": 2, "terms": [{"q": 0, "z2": 0, "num": "x", "den": "1"}]})")),
                  Error);
  CHECK_THROWS_AS(fjseries_from_json(Json::parse(
                      R"({"qden": 1, "trunc": 2, "terms": [{"q": 0, "z2": 0, "num": "1", "den": "0"}]})")),
                  Error);
}

TEST_CASE("report JSON omits timings unless asked") {
  const std::vector<VerificationReport> reps = {{"a", "1", "1", true, 12.5}};
  CHECK_FALSE(to_json(reps).at(0).contains("runtimeMs"));
  CHECK(to_json(reps, true).at(0)["runtimeMs"] == 12);
}

TEST_CASE("data JSON carries big integers as strings") {
  BorcherdsData d;
  d.A = 1;
  d.C = 1;
  d.kprime = Rational("62169320884762434");
  const Json j = to_json(d);
  CHECK(j["A"] == "1");
  CHECK(j["weight"] == "62169320884762434");
}
