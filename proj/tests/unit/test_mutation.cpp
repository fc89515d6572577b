#include "cuspsyz/verify.hpp"
#include "doctest.h"

using namespace cuspsyz;

namespace {

const CriterionResult& find(const std::vector<CriterionResult>& rs, int id) {
  for (const auto& r : rs)
    if (r.id == id) return r;
  FAIL("criterion missing");
  return rs.front();
}

long long defect_without_half(const BettiData& betti, int n) {
  long long s = 0;
  for (unsigned b : betti.b)
    if (static_cast<int>(b) >= n) s += static_cast<long long>(b - n + 1) * (b - n + 2);
  for (unsigned a : betti.a)
    if (static_cast<int>(a) >= n) s -= static_cast<long long>(a - n + 1) * (a - n + 2);
  return s;
}

}  // namespace

TEST_CASE("the suite passes on the real implementation") {
  SuiteOptions o;
  o.only = {3, 6};
  auto rs = run_reproduction_suite(o);
  CHECK(find(rs, 3).pass);
  CHECK(find(rs, 6).pass);
}

TEST_CASE("dropping the factor one half breaks the defect oracle") {
  SuiteOptions o;
  o.only = {3};
  SuiteHooks h = default_hooks();
  h.defect = defect_without_half;
  auto rs = run_reproduction_suite(o, h);
  CHECK_FALSE(find(rs, 3).pass);
}

TEST_CASE("a normal form that raises c breaks criterion 6") {
  SuiteOptions o;
  o.only = {6};
  SuiteHooks h = default_hooks();
  h.normal_form = [](const AdmissibleSeq& s) {
    // Swap in the worst strongly admissible sequence of the same rank and D0.
    AdmissibleSeq worst = strong_normal_form(s);
    for (const auto& t : enumerate_strongly_admissible(s.k, s.r, m_bound(6 * s.k)))
      if (t.d0() == s.d0() && normal_form_shape(t) != 0 && t.c_value() > worst.c_value()) worst = t;
    return worst;
  };
  auto rs = run_reproduction_suite(o, h);
  CHECK_FALSE(find(rs, 6).pass);
}

TEST_CASE("a normal form that stops early breaks criterion 6") {
  SuiteOptions o;
  o.only = {6};
  SuiteHooks h = default_hooks();
  h.normal_form = [](const AdmissibleSeq& s) { return s; };
  auto rs = run_reproduction_suite(o, h);
  CHECK_FALSE(find(rs, 6).pass);
}
