#include <algorithm>
#include <set>

#include "cuspsyz/error.hpp"
#include "cuspsyz/sequences.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cuspsyz;

namespace {

AdmissibleSeq S(unsigned k, unsigned r, std::vector<int> a, std::vector<int> b) {
  AdmissibleSeq s;
  s.k = k;
  s.r = r;
  s.a = std::move(a);
  s.b = std::move(b);
  return s;
}

// Every descending list of length n with entries in [lo, hi].
void descending(int n, int lo, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  int top = cur.empty() ? hi : cur.back();
  for (int v = top; v >= lo; --v) {
    cur.push_back(v);
    descending(n, lo, hi, cur, out);
    cur.pop_back();
  }
}

// Brute force over all candidate lists, filtered by the clause checker.
std::set<std::pair<std::vector<int>, std::vector<int>>> brute(unsigned k, unsigned r, long long cap, bool strong_only) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  int K = 5 * static_cast<int>(k);
  for (int D0 = 1; D0 < K; ++D0)
    for (int t = 1; t <= D0; ++t) {
      std::vector<std::vector<int>> bs, as;
      std::vector<int> cur;
      descending(t, D0 + 1, K, cur, bs);
      descending(t, D0, K - 1, cur, as);
      for (const auto& b : bs)
        for (auto a : as) {
          a.push_back(D0);
          AdmissibleSeq s = S(k, r, a, b);
          auto rep = is_admissible(s);
          if (!rep.admissible || !rep.reduced || s.c_value() > cap) continue;
          if (strong_only && !rep.strongly) continue;
          out.insert({a, b});
        }
    }
  return out;
}

}  // namespace

TEST_CASE("admissibility examples") {
  auto nine = is_admissible(S(1, 3, {4, 4, 4, 3}, {5, 5, 5}));
  CHECK(nine.admissible);
  CHECK(nine.strongly);
  CHECK(nine.reduced);
  auto conic = is_admissible(S(1, 1, {3, 2}, {5}));
  CHECK(conic.admissible);
  CHECK(conic.strongly);
  CHECK(S(1, 1, {3, 2}, {5}).c_value() == 6);
  auto bad = is_admissible(S(1, 2, {3, 3, 2}, {5, 5}));
  CHECK_FALSE(bad.admissible);
  CHECK_FALSE(bad.clauses[0]);
  CHECK_FALSE(is_admissible(S(1, 4, {4, 4, 4, 3}, {5, 5, 5})).admissible);
  CHECK_FALSE(is_admissible(S(1, 1, {4, 4, 2}, {5, 5})).admissible);
  CHECK_THROWS_AS(is_admissible(S(1, 1, {2, 3}, {5})), Error);
  CHECK_THROWS_AS(is_admissible(S(1, 1, {3, 2}, {5, 5})), Error);
}

TEST_CASE("reduction") {
  AdmissibleSeq r = reduce(S(1, 1, {4, 4, 3}, {5, 4}));
  CHECK(r.a == std::vector<int>{4, 3});
  CHECK(r.b == std::vector<int>{5});
  AdmissibleSeq twice = reduce(S(1, 1, {5, 4, 4, 3}, {5, 5, 4}));
  CHECK(twice.a == std::vector<int>{4, 3});
  CHECK(twice.b == std::vector<int>{5});
  CHECK(reduce(r) == r);
  Rng rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    int t = 1 + static_cast<int>(rng.uniform(5));
    std::vector<int> a(t + 1), b(t);
    for (auto& x : a) x = 1 + static_cast<int>(rng.uniform(9));
    for (auto& x : b) x = 1 + static_cast<int>(rng.uniform(9));
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    long long sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    if (sa != sb) continue;
    AdmissibleSeq s = S(2, 1, a, b);
    AdmissibleSeq red = reduce(s);
    CHECK(red.c_value() == s.c_value());
    CHECK(is_reduced(red));
    if (std::find(b.begin(), b.end(), a.back()) == b.end()) CHECK(red.d0() == s.d0());
  }
}

TEST_CASE("exhaustive k=1 minima") {
  CHECK(enumerate_strongly_admissible(1, 4, 9).empty());
  CHECK(enumerate_strongly_admissible(1, 1, 5).empty());
  auto r1 = enumerate_strongly_admissible(1, 1, 6);
  REQUIRE_FALSE(r1.empty());
  for (const auto& s : r1) CHECK(s.c_value() == 6);
  auto r3 = enumerate_strongly_admissible(1, 3, 9);
  CHECK(std::find(r3.begin(), r3.end(), S(1, 3, {4, 4, 4, 3}, {5, 5, 5})) != r3.end());
  const long long expect[] = {6, 8, 9};
  for (unsigned r = 1; r <= 3; ++r) {
    auto all = enumerate_strongly_admissible(1, r, 9);
    long long best = all.front().c_value();
    for (const auto& s : all) best = std::min(best, s.c_value());
    CHECK(best == expect[r - 1]);
  }
}

TEST_CASE("without the cusp cap, rank 8 on a sextic needs 10 cusps") {
  EnumerateOptions o;
  o.m_override = 12;
  auto r4 = enumerate_strongly_admissible(1, 4, 12, o);
  REQUIRE(r4.size() == 1);
  CHECK(r4[0].c_value() == 10);
  CHECK(r4[0].a == std::vector<int>{4, 4, 4, 4, 4});
  CHECK(r4[0].b == std::vector<int>{5, 5, 5, 5});
}

TEST_CASE("exhaustive k=2 minima match the formula") {
  const long long expect[] = {24, 29, 33, 36, 39};
  for (unsigned r = 1; r <= 5; ++r) {
    auto all = enumerate_strongly_admissible(2, r, m_bound(12));
    REQUIRE_FALSE(all.empty());
    long long best = all.front().c_value();
    for (const auto& s : all) best = std::min(best, s.c_value());
    CHECK(best == expect[r - 1]);
    CHECK(min_cusps_formula(2, r).ceiling == static_cast<long>(best));
  }
}

TEST_CASE("search agrees with brute force") {
  for (unsigned r = 1; r <= 4; ++r)
    for (bool strong : {true, false}) {
      EnumerateOptions o;
      o.strong_only = strong;
      auto res = enumerate_sequences(1, r, 9, o);
      CHECK(res.complete);
      std::set<std::pair<std::vector<int>, std::vector<int>>> got;
      for (const auto& s : res.sequences) got.insert({s.a, s.b});
      CHECK(got.size() == res.sequences.size());
      CHECK(got == brute(1, r, 9, strong));
    }
}

TEST_CASE("search output is canonical regardless of threads") {
  EnumerateOptions one, many;
  many.threads = 4;
  auto a = enumerate_sequences(2, 2, 40, one);
  auto b = enumerate_sequences(2, 2, 40, many);
  CHECK(a.sequences == b.sequences);
  EnumerateOptions tiny;
  tiny.max_nodes = 10;
  CHECK_FALSE(enumerate_sequences(2, 1, 40, tiny).complete);
  try {
    enumerate_strongly_admissible(2, 1, 40, tiny);
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resource);
  }
}

TEST_CASE("normal form examples") {
  AdmissibleSeq nine = S(1, 3, {4, 4, 4, 3}, {5, 5, 5});
  CHECK(normal_form_shape(nine) == 1);
  CHECK(strong_normal_form(nine) == nine);
  AdmissibleSeq two = S(1, 2, {4, 3, 3}, {5, 5});
  CHECK(normal_form_shape(two) == 2);
  CHECK(strong_normal_form(two) == two);
  CHECK_THROWS_AS(strong_normal_form(S(1, 1, {4, 4, 2}, {5, 5})), Error);
  CHECK_THROWS_AS(strong_normal_form(S(1, 2, {4, 4, 2}, {5, 5})), Error);
}

TEST_CASE("normal form lands in a shape without raising c") {
  std::size_t searched = 0, cases = 0;
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned r = 1; r <= 5 * k; ++r)
      for (const auto& s : enumerate_strongly_admissible(k, r, m_bound(6 * k))) {
        NormalFormResult nf = strong_normal_form_traced(s);
        ++cases;
        if (nf.shape_search) ++searched;
        CHECK(nf.shape != 0);
        CHECK(normal_form_shape(nf.seq) == nf.shape);
        CHECK(is_strongly(nf.seq));
        CHECK(nf.seq.d0() == s.d0());
        CHECK(nf.seq.r == s.r);
        CHECK(nf.seq.c_value() <= s.c_value());
        if (normal_form_shape(s) != 0) CHECK(nf.seq == s);
        CHECK(strong_normal_form(nf.seq) == nf.seq);
        if (k <= 2) CHECK_FALSE(nf.shape_search);
      }
  CHECK(cases == 1801);
  CHECK(searched == 71);
  MESSAGE(cases << " normal-form cases, " << searched << " finished by shape search");
}
