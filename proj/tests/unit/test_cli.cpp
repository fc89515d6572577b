#include <cstdio>
#include <sstream>

#include "cuspsyz/cli.hpp"
#include "cuspsyz/io.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cuspsyz::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json js(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("resolve command") {
  Run three = run({"resolve", test::data("three_points.json")});
  REQUIRE(three.code == 0);
  CHECK(js(three)["a"] == std::vector<int>{2, 2, 2});
  CHECK(js(three)["b"] == std::vector<int>{3, 3});
  CHECK(js(three)["meta"]["inputs"][0]["sha256"] ==
        cuspsyz::sha256_hex(test::slurp(test::data("three_points.json"))));
  Run one = run({"resolve", test::data("one_point.json")});
  CHECK(js(one)["a"] == std::vector<int>{1, 1});
  CHECK(js(one)["b"] == std::vector<int>{2});
  CHECK(run({"resolve", test::data("malformed.json")}).code == 2);
  CHECK(run({"resolve", test::data("missing.json")}).code == 2);
  CHECK(run({"resolve"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("analyze command") {
  Run nine = run({"analyze", test::data("nine_cusp_sextic_p13.json"), "--threads", "2"});
  REQUIRE(nine.code == 0);
  CHECK(js(nine)["mw_rank"] == 6);
  CHECK(js(nine)["alexander_exponent"] == 3);
  CHECK(js(nine)["cusps"].size() == 9);
  Run smooth = run({"analyze", test::data("smooth_sextic_p31.json")});
  REQUIRE(smooth.code == 0);
  CHECK(js(smooth)["mw_rank"] == 0);
  Run built = run({"analyze", "--construct", "1", "31", "7"});
  REQUIRE(built.code == 0);
  CHECK(js(built)["mw_rank"] == 2);
  CHECK(js(built)["cusps"].size() == 6);
  CHECK(run({"analyze", test::data("six_lines_p31.json")}).code == 3);
  CHECK(run({"analyze", "--construct", "1", "5", "1"}).code == 2);
}

TEST_CASE("identical invocations give identical bytes") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"analyze", "--construct", "1", "61", "3", "--threads", "1"},
           {"construct", "--k", "1", "--p", "31", "--seed", "9"},
           {"bounds", "--k-max", "3", "--enumerate", "1"},
           {"search", "--k", "1", "--r", "2"},
           {"resolve", test::data("conic_six_points_q.json")}}) {
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  Run t1 = run({"analyze", "--construct", "1", "61", "3", "--threads", "1"});
  Run t3 = run({"analyze", "--construct", "1", "61", "3", "--threads", "3"});
  CHECK(t1.out == t3.out);
}

TEST_CASE("construct output feeds analyze") {
  std::string path = "construct_roundtrip.json";
  Run c = run({"construct", "--k", "1", "--p", "31", "--seed", "4", "--out", path});
  REQUIRE(c.code == 0);
  Run a = run({"analyze", path});
  REQUIRE(a.code == 0);
  CHECK(js(a)["mw_rank"] == 2);
  CHECK(js(a)["meta"]["inputs"][0]["sha256"] == cuspsyz::sha256_hex(test::slurp(path)));
  std::remove(path.c_str());
}

TEST_CASE("bounds and search commands") {
  Run b = run({"bounds", "--k-max", "2", "--enumerate", "1"});
  REQUIRE(b.code == 0);
  auto rows = js(b)["rows"];
  CHECK(rows[0]["enumerated_min"] == 6);
  CHECK(rows[1]["enumerated_min"] == 8);
  CHECK(rows[2]["enumerated_min"] == 9);
  CHECK(rows[6]["formula_lower_bound"]["ceil"] == "24");
  Run slope = run({"bounds", "--k-max", "50"});
  CHECK(js(slope)["slope"]["half_rank_in_2.6_2.8"] == true);
  CHECK(js(slope)["slope"]["rank_in_5.2_5.5"] == true);
  Run csv = run({"bounds", "--k-max", "1", "--format", "csv"});
  CHECK(csv.out.find("1,1,6,") != std::string::npos);
  CHECK(run({"bounds", "--k-max", "1001"}).code == 2);
  Run empty = run({"search", "--k", "1", "--r", "4", "--c-cap", "9"});
  REQUIRE(empty.code == 0);
  CHECK(js(empty)["count"] == 0);
  Run budget = run({"search", "--k", "2", "--r", "1", "--budget-nodes", "5"});
  CHECK(budget.code == 5);
}

TEST_CASE("scale command") {
  Run s = run({"scale", test::data("three_points.json"), "--w", "2", "--trials", "5", "--seed", "3"});
  REQUIRE(s.code == 0);
  CHECK(js(s)["verdict"] == "success");
}
