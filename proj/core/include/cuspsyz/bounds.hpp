#pragma once

#include <utility>
#include <vector>

#include "cuspsyz/surd.hpp"

namespace cuspsyz {

// Which upper bound M(d) on the number of cusps of a degree-d curve is used.
enum class MPolicy {
  Default,   // Langer floor, except the exact value 9 for sextics
  Langer,    // floor of the Langer bound
  Miyaoka,   // floor((5d^2 - 6d)/16)
};

// (125+sqrt73)/432 d^2 - (511+11sqrt73)/1752 d
Surd73 langer_bound(unsigned d);
long long langer_floor(unsigned d);  // clamped at 0
long long m_bound(unsigned d, MPolicy policy = MPolicy::Default);
// ceil(2M(d)/d)
long long m_of(unsigned d, MPolicy policy = MPolicy::Default);

struct SurdBound {
  bool finite;  // false when the radicand is negative (no admissible value)
  QuadraticSurd value;
  Integer ceiling;
};

// Least number of cusps allowed for a strong sequence at rank 2r on a
// degree-6k curve: (3k/2)(r-1+2k+sqrt R), R = -r^2+4kr+1-4k+4k^2.
SurdBound min_cusps_formula(unsigned k, unsigned r);
// The matching least value of D0: (2k-1+r+sqrt R)/2.
SurdBound d0_min(unsigned k, unsigned r);
// Values of c for the two extremal sequence shapes.
Rational min_cusps_shape2(unsigned k, unsigned r);
Rational min_cusps_shape3(unsigned k, unsigned r);

// 6k^2 + 3(r-1)k + 3r(1-r)/4 and the coefficient C(r) = 3r(r-1)^2/8 of the
// first omitted 1/k term.
Rational min_cusps_expansion(unsigned k, unsigned r);
Rational min_cusps_expansion_constant(unsigned r);

struct GBound {
  unsigned k;
  Surd73 linear;  // -219-33sqrt73 + (9125+73sqrt73)k
  Surd73 alpha;   // radicand, quadratic in k
  Integer half_rank_floor;
  Integer rank_floor;
  Rational half_lo, half_hi;  // 10^-3 bracket of the half-rank bound
  Rational rank_lo, rank_hi;
};

// Half-rank bound (linear - sqrt alpha)/2628 and rank bound (.)/1314 with
// exact floors.
GBound g_bound(unsigned k);

// Exact limit of g_bound(k)/k: (125+sqrt73-sqrt(2302-106sqrt73))/36,
// bracketed to 10^-digits.
std::pair<Rational, Rational> g_slope_bracket(unsigned digits = 3);

// (k, r) pairs with k <= k_max for which r maximal syzygies with D0 = r
// survive the cusp-count bounds.
std::vector<std::pair<unsigned, unsigned>> lemexcl_scan(unsigned k_max, MPolicy policy = MPolicy::Default);

}  // namespace cuspsyz
