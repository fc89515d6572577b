#pragma once

#include <string>
#include <vector>

#include "cuspsyz/bounds.hpp"
#include "cuspsyz/resolution.hpp"

namespace cuspsyz {

// Failure count of the cusp set to impose independent conditions on forms of
// degree n-3, read off the resolution:
// (1/2)[sum_{b_i>=n} (b_i-n+1)(b_i-n+2) - sum_{a_i>=n} (a_i-n+1)(a_i-n+2)].
long long defect(const BettiData& betti, int n);

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct RankReport {
  unsigned k = 0;
  BettiData betti;
  long long defect = 0;
  long long mw_rank = 0;
  long long alexander_exponent = 0;
  std::vector<Check> checks;
  std::vector<ProjPoint> cusps;
  std::vector<std::size_t> hilbert;
};

// Rank from the resolution of the cusp ideal of a degree-6k cuspidal curve:
// 2·#{i : b_i = 5k}. Raises a contradiction when b_i > 5k or a_i >= 5k.
RankReport mw_rank(const BettiData& betti, unsigned k);

struct BezoutCheck {
  bool pass;
  Rational bound;  // min(D0·d/2, M(d))
  Rational slack;
  bool display_pass;
  Rational display_bound;  // min(a_{t+1}, 5d/8 - 3/4)·d/2
  Rational display_slack;
};

BezoutCheck bezout_cusp_check(const BettiData& betti, unsigned d, MPolicy policy = MPolicy::Default);

struct NodalCheck {
  long long components;
  std::size_t b_equal_d;
};

// For the node set of a degree-d curve with c components: b_i <= d and
// #{b_i = d} = c - 1. Raises a contradiction otherwise.
NodalCheck nodal_component_check(const BettiData& betti, unsigned d, long long components);

struct AnalyzeOptions {
  SingularPointsOptions scan;
  MPolicy policy = MPolicy::Default;
  std::uint64_t seed = 0;  // for the squarefree test
};

// Singular points, classification, resolution and rank of a cuspidal curve
// of degree 6k over F_p. Non-cusp singularities are unsupported.
RankReport analyze_curve(const CurveSpec& curve, const AnalyzeOptions& opts = {});

}  // namespace cuspsyz
