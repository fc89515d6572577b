#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cuspsyz/geometry.hpp"

namespace cuspsyz {

struct ConstructOptions {
  unsigned max_attempts = 200;
  SingularPointsOptions scan;
};

struct CuspidalCurve {
  CurveSpec curve;
  HomogeneousPoly f1, f2;
  std::vector<ProjPoint> cusps;  // canonical order
  unsigned attempts = 0;
};

// Outcome of validating one pair (f1, f2) as f = f1^3 + f2^2.
struct AssembleResult {
  bool ok = false;
  std::string category;
  std::string reason;
  std::vector<ProjPoint> cusps;
};

// Checks that Z(f1) and Z(f2) meet in `required` distinct rational points,
// each an ordinary cusp of f = f1^3 + f2^2, that f has no other rational
// singular points, and that f is squarefree.
AssembleResult assemble_cuspidal(const HomogeneousPoly& f1, const HomogeneousPoly& f2, std::size_t required,
                                 Rng& rng, const SingularPointsOptions& scan = {});

// Random (2k, 3k)-type sextic-family curve f1^3 + f2^2 of degree 6k over F_p
// with at least `target` rational cusps (default: all 6k^2). Deterministic in
// (k, p, seed).
CuspidalCurve construct_cuspidal(unsigned k, std::uint64_t p, std::uint64_t seed, std::size_t target = 0,
                                 const ConstructOptions& opts = {});

}  // namespace cuspsyz
