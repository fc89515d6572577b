#include "cuspsyz/error.hpp"
#include "cuspsyz/io.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace cuspsyz;

TEST_CASE("sha256 digests") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("curve files round-trip") {
  std::string text = test::slurp(test::data("nine_cusp_sextic_p13.json"));
  CurveSpec c = parse_curve(text);
  CHECK(c.p == 13);
  CHECK(c.k == 1);
  CHECK(c.product() == nine_cusp_sextic(Field::prime(13)));
  std::string out = curve_json(c);
  CurveSpec back = parse_curve(out);
  CHECK(back.product() == c.product());
  CHECK(back.provenance == c.provenance);
  CHECK(curve_json(back) == out);
}

TEST_CASE("malformed curve files") {
  CHECK_THROWS_AS(parse_curve("{"), Error);
  CHECK_THROWS_AS(parse_curve(R"({"p": 12, "k": 1, "factors": [[[1, [6, 0, 0]]]]})"), Error);
  CHECK_THROWS_AS(parse_curve(R"({"p": 13, "k": 1, "factors": [[[1, [5, 0, 0]]]]})"), Error);
  CHECK_THROWS_AS(parse_curve(R"({"p": 13, "k": 1, "factors": [[[1, [5, 0, 0]], [1, [1, 1, 0, 0]]]]})"), Error);
  CHECK_THROWS_AS(parse_curve(R"({"p": 13, "k": 1, "factors": [[[1, [6, 0, 0]], [1, [5, 0, 0]]]]})"), Error);
  CHECK_THROWS_AS(parse_curve(R"({"p": 13, "factors": []})"), Error);
  try {
    parse_curve("not json");
  } catch (const Error& e) {
    CHECK(exit_code_for(e.kind()) == 2);
  }
}

TEST_CASE("point files") {
  auto pts = parse_points(test::slurp(test::data("three_points.json")));
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].field() == Field::prime(101));
  auto q = parse_points(test::slurp(test::data("conic_six_points_q.json")));
  CHECK(q.size() == 6);
  CHECK(q[5] == ProjPoint(Field::rationals().from_rational(Rational(8, 17)),
                          Field::rationals().from_rational(Rational(15, 17)), Field::rationals().one()));
  CHECK(parse_points(points_json(q, Field::rationals())) == q);
  CHECK_THROWS_AS(parse_points(test::slurp(test::data("malformed.json"))), Error);
  CHECK_THROWS_AS(parse_points(R"({"field": {"p": 101}, "points": [[1, 2, 3], [2, 4, 6]]})"), Error);
  CHECK_THROWS_AS(parse_points(R"({"field": {"p": 101}, "points": [[0, 0, 0]]})"), Error);
  CHECK_THROWS_AS(parse_points(R"({"field": "R", "points": []})"), Error);
}

TEST_CASE("documents embed provenance and are deterministic") {
  auto pts = parse_points(test::slurp(test::data("three_points.json")));
  Meta m{"resolve", 5, {{"three_points.json", sha256_hex("x")}}, {}};
  std::string a = resolution_json(resolve(pts), m), b = resolution_json(resolve(pts), m);
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["a"] == std::vector<unsigned>{2, 2, 2});
  CHECK(j["meta"]["version"] == tool_version());
  CHECK(j["meta"]["seed"] == 5);
  CHECK(j["meta"]["inputs"][0]["sha256"] == sha256_hex("x"));
}

TEST_CASE("bounds table") {
  BoundsTable t = bounds_table(2, 6, 1, MPolicy::Default, {});
  REQUIRE(t.rows.size() == 12);
  CHECK(t.rows[0].formula.ceiling == 6);
  CHECK(t.rows[1].formula.ceiling == 8);
  CHECK(t.rows[2].formula.ceiling == 9);
  CHECK(t.rows[0].enumerated_min == 6);
  CHECK(t.rows[3].enumeration_ran);
  CHECK_FALSE(t.rows[3].enumerated_min);
  CHECK(t.rows[6].formula.ceiling == 24);
  CHECK_FALSE(t.rows[6].enumeration_ran);
  std::string csv = bounds_csv(t);
  CHECK(csv.rfind("k,r,formula_lower_bound", 0) == 0);
  auto j = nlohmann::json::parse(bounds_json(t, Meta{"bounds", 0, {}, {}}));
  CHECK(j["rows"][0]["formula_lower_bound"]["ceil"] == "6");
  CHECK(j["g_bound"][1]["half_rank_floor"] == "5");
  BoundsTable big = bounds_table(50, 1, 0, MPolicy::Default, {});
  CHECK(big.half_slope_in_range);
  CHECK(big.rank_slope_in_range);
}
