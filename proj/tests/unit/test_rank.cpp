#include "cuspsyz/construct.hpp"
#include "cuspsyz/error.hpp"
#include "cuspsyz/rank.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cuspsyz;
using test::pt;

namespace {

BettiData B(std::vector<unsigned> a, std::vector<unsigned> b, std::size_t n) { return BettiData{a, b, n}; }

bool check_passes(const RankReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.pass;
  FAIL("missing check " << name);
  return false;
}

}  // namespace

TEST_CASE("defect examples") {
  CHECK(defect(B({2, 2, 2}, {3, 3}, 3), 5) == 0);
  CHECK(defect(B({3, 2}, {5}, 6), 5) == 1);
  CHECK(defect(B({4, 4, 4, 3}, {5, 5, 5}, 9), 5) == 3);
  CHECK(defect(BettiData::unit_ideal(), 5) == 0);
}

TEST_CASE("defect equals the failure to impose independent conditions") {
  Field f = Field::prime(101);
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    auto pts = test::random_points(f, 1 + rng.uniform(25), rng);
    BettiData b = minimal_resolution(pts);
    for (int n = 3; n <= static_cast<int>(b.b.front()) + 3; ++n) {
      long long oracle = static_cast<long long>(pts.size()) - static_cast<long long>(eval_matrix(pts, n - 3).rank());
      CHECK(defect(b, n) == oracle);
    }
  }
}

TEST_CASE("rank from resolution data") {
  RankReport nine = mw_rank(B({4, 4, 4, 3}, {5, 5, 5}, 9), 1);
  CHECK(nine.mw_rank == 6);
  CHECK(nine.alexander_exponent == 3);
  CHECK(mw_rank(B({3, 2}, {5}, 6), 1).mw_rank == 2);
  CHECK(mw_rank(B({2, 2, 2}, {3, 3}, 3), 1).mw_rank == 0);
  CHECK(mw_rank(BettiData::unit_ideal(), 1).mw_rank == 0);
  CHECK_THROWS_AS(mw_rank(B({6, 1}, {7}, 6), 1), Error);
  CHECK_THROWS_AS(mw_rank(B({5, 5}, {6, 4}, 0), 1), Error);
  try {
    mw_rank(B({6, 1}, {7}, 6), 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Contradiction);
  }
}

TEST_CASE("cusp count bounds") {
  BezoutCheck dual = bezout_cusp_check(B({4, 4, 4, 3}, {5, 5, 5}, 9), 6);
  CHECK(dual.pass);
  CHECK(dual.slack == 0);
  CHECK(bezout_cusp_check(B({3, 2}, {5}, 6), 6).pass);
  CHECK_FALSE(bezout_cusp_check(B({4, 4, 4, 3}, {5, 5, 5}, 10), 6).pass);
}

TEST_CASE("nodal component check") {
  NodalCheck three = nodal_component_check(B({2, 2, 2}, {3, 3}, 3), 3, 3);
  CHECK(three.b_equal_d == 2);
  CHECK(nodal_component_check(B({1, 1}, {2}, 1), 2, 2).b_equal_d == 1);
  CHECK(nodal_component_check(BettiData::unit_ideal(), 6, 1).b_equal_d == 0);
  CHECK_THROWS_AS(nodal_component_check(B({2, 2, 2}, {3, 3}, 3), 3, 2), Error);
  CHECK_THROWS_AS(nodal_component_check(B({3, 1}, {4}, 3), 3, 2), Error);
}

TEST_CASE("analysis of fixture and constructed curves") {
  CurveSpec nine;
  nine.p = 13;
  nine.k = 1;
  nine.factors = {nine_cusp_sextic(Field::prime(13))};
  RankReport r = analyze_curve(nine);
  CHECK(r.cusps.size() == 9);
  CHECK(r.mw_rank == 6);
  CHECK(r.alexander_exponent == 3);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);

  Field f = Field::prime(31);
  CurveSpec smooth;
  smooth.p = 31;
  smooth.k = 1;
  smooth.factors = {test::var(f, 0).pow(6) + test::var(f, 1).pow(6) + test::var(f, 2).pow(6)};
  RankReport s = analyze_curve(smooth);
  CHECK(s.mw_rank == 0);
  CHECK(s.cusps.empty());

  CuspidalCurve c = construct_cuspidal(1, 31, 7);
  RankReport cr = analyze_curve(c.curve);
  CHECK(cr.mw_rank == 2);
  CHECK(cr.cusps == c.cusps);
  CHECK(check_passes(cr, "constructed_rank_at_least_2"));

  CurveSpec wrong = smooth;
  wrong.k = 2;
  CHECK_THROWS_AS(analyze_curve(wrong), Error);
  CurveSpec square = smooth;
  square.factors = {test::var(f, 0).pow(3), test::var(f, 1).pow(3)};
  CHECK_THROWS_AS(analyze_curve(square), Error);
}

TEST_CASE("constructed k=2 curve") {
  CuspidalCurve c = construct_cuspidal(2, 101, 1);
  CHECK(c.cusps.size() == 24);
  RankReport r = analyze_curve(c.curve);
  CHECK(r.mw_rank >= 2);
  CHECK(r.betti.b.front() == 10);
  for (unsigned b : r.betti.b) CHECK(b <= 10);
}
