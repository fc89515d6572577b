#include <algorithm>

#include "cuspsyz/constraints.hpp"
#include "cuspsyz/error.hpp"
#include "doctest.h"

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

SymPoly V(Var v) { return SymPoly::var(v); }

}  // namespace

TEST_CASE("symbolic polynomial arithmetic") {
  SymPoly x = V(Var::D0), y = V(Var::D1);
  SymPoly p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK((p - p).is_zero());
  CHECK(p.degree_in(Var::D0) == 2);
  CHECK(p.evaluate({{Var::D0, 3}, {Var::D1, 2}}) == 5);
  CHECK(p.substitute(Var::D1, x).is_zero());
  CHECK(binom2(x).evaluate({{Var::D0, 3}}) == 10);
  CHECK_THROWS_AS(p.evaluate({{Var::D0, 1}}), Error);
}

TEST_CASE("closed-form identities") {
  auto ids = symbolic_identities();
  REQUIRE(ids.size() == 3);
  for (const auto& id : ids) CHECK_MESSAGE(id.holds, id.name << ": " << id.detail);
}

TEST_CASE("the displayed forms differ from what the definitions give") {
  SymPoly D2 = V(Var::D2);
  CHECK(h2a_printed() - h2a_definition() == -2 * D2);
  SymPoly k = V(Var::k), r = V(Var::r), D0 = V(Var::D0), D1 = V(Var::D1);
  SymPoly locus = (h2a_closed() - h2b_closed()).substitute(Var::D1, D0).substitute(Var::A, 5 * k + r - 1 - D2);
  SymPoly with_d1 = ((D0 - D2) * (D0 + 1 - r - 5 * k + D1)).substitute(Var::D1, D0);
  CHECK_FALSE(locus == with_d1);
}

TEST_CASE("the D2 = r branch forces D0 >= 4k-1") {
  REQUIRE(d2_equals_r_min_d0(1, 1).has_value());
  CHECK(*d2_equals_r_min_d0(1, 1) == 3);
  for (unsigned k = 1; k <= 6; ++k)
    for (unsigned r = 1; r <= 5 * k - 1; ++r) {
      auto d0 = d2_equals_r_min_d0(k, r);
      if (d0) CHECK(*d0 >= static_cast<int>(4 * k - 1));
    }
}

TEST_CASE("non-strong reduction preconditions") {
  CHECK_THROWS_AS(non_strong_reduction(S(1, 3, {4, 4, 4, 3}, {5, 5, 5})), Error);
  CHECK_THROWS_AS(non_strong_reduction(S(1, 1, {4, 4, 2}, {5, 5})), Error);
}

TEST_CASE("pure admissibility admits a sequence with no strong reduction") {
  AdmissibleSeq s = S(1, 1, {4, 2, 2}, {5, 3});
  REQUIRE(is_admissible(s).admissible);
  REQUIRE_FALSE(is_strongly(s));
  CHECK(s.c_value() == 5);
  FeasibilityReport feas = constraint_feasibility(s);
  CHECK_FALSE(feas.feasible);
  for (const auto& [d1, failed] : feas.violations) CHECK(std::count(failed.begin(), failed.end(), 12) == 1);
  NonStrongOutcome gated = non_strong_reduction(s);
  CHECK(gated.status == NonStrongOutcome::Status::ExcludedByConstraints);
  NonStrongOptions literal;
  literal.gate_on_constraints = false;
  try {
    non_strong_reduction(s, literal);
    FAIL("expected falsification");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Falsification);
  }
}

TEST_CASE("reductions agree with a second enumeration") {
  for (unsigned k = 1; k <= 2; ++k) {
    long long M = m_bound(6 * k);
    for (unsigned r = 1; r <= 5 * k; ++r) {
      EnumerateOptions all;
      all.strong_only = false;
      auto strong = enumerate_strongly_admissible(k, r, M);
      for (const auto& s : enumerate_sequences(k, r, M, all).sequences) {
        if (is_strongly(s)) continue;
        std::optional<long long> best;
        for (const auto& t : strong)
          if (t.c_value() <= s.c_value() && (!best || t.c_value() < *best)) best = t.c_value();
        NonStrongOptions literal;
        literal.gate_on_constraints = false;
        if (best) {
          NonStrongOutcome out = non_strong_reduction(s, literal);
          REQUIRE(out.strong);
          CHECK(out.strong->c_value() == *best);
          CHECK(is_strongly(*out.strong));
        } else {
          CHECK_THROWS_AS(non_strong_reduction(s, literal), Error);
          CHECK(non_strong_reduction(s).status == NonStrongOutcome::Status::ExcludedByConstraints);
        }
      }
    }
  }
}

TEST_CASE("constraint system reports every condition") {
  ConstraintReport rep = constraint_system(closed_form_state(1, 1, 4, 3, 3, 1));
  CHECK(rep.conditions.size() == 13);
  CHECK_FALSE(rep.literal);
}
