#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuspsyz/geometry.hpp"

namespace cuspsyz {

// Degrees in the minimal resolution 0 -> ⊕S(-b_i) -> ⊕S(-a_i) -> S -> S/I -> 0
// of the ideal of a reduced point set; both lists sorted descending.
struct BettiData {
  std::vector<unsigned> a;  // t+1 generator degrees
  std::vector<unsigned> b;  // t syzygy degrees
  std::size_t point_count = 0;

  std::size_t t() const { return b.size(); }
  // The unit ideal, which is what an empty point set has.
  static BettiData unit_ideal() { return BettiData{{0}, {}, 0}; }
  friend bool operator==(const BettiData& x, const BettiData& y) { return x.a == y.a && x.b == y.b; }
  std::string to_string() const;
};

struct DegreeStep {
  unsigned degree;
  std::size_t hilbert;
  std::size_t ideal_dim;
  std::size_t ideal_from_below;  // dim S_1 * I_{d-1}
  std::size_t new_generators;
  std::size_t syzygy_dim;
  std::size_t syzygy_from_below;
  std::size_t new_syzygies;
};

struct Resolution {
  BettiData betti;
  std::vector<std::size_t> hilbert;  // h(0), h(1), ... through the last degree examined
  std::vector<HomogeneousPoly> generators;
  std::vector<DegreeStep> steps;  // the per-degree dimension count certificate
};

std::size_t hilbert_function(const std::vector<ProjPoint>& points, unsigned degree);

struct GradedPiece {
  unsigned degree;
  std::vector<HomogeneousPoly> basis;
};
GradedPiece ideal_piece(const std::vector<ProjPoint>& points, unsigned degree);

// Minimal generators and first syzygies found degree by degree by linear
// algebra on evaluation matrices; stops two degrees after h reaches #points.
Resolution resolve(const std::vector<ProjPoint>& points);
BettiData minimal_resolution(const std::vector<ProjPoint>& points);

// Identities every resolution of a reduced point set satisfies; returns the
// ones that fail (empty when consistent).
std::vector<std::string> betti_violations(const BettiData& betti);
// Hilbert function predicted from the Betti numbers.
long long hilbert_from_betti(const BettiData& betti, int degree);

enum class MapFamily {
  PowerComposite,  // L2 ∘ (z -> z^w) ∘ L1
  Generic,         // uniformly random components
};

struct ScaledTrial {
  std::string outcome;  // success, base-point, non-generic, mismatch
  std::size_t preimages = 0;
  std::optional<BettiData> betti;
};

struct ScaledReport {
  BettiData original;
  BettiData expected;
  unsigned w = 0;
  std::vector<ScaledTrial> trials;
  std::size_t successes = 0;
  std::size_t mismatches = 0;
  std::string verdict;  // success, mismatch, inconclusive
};

// Evaluates one map draw against the expected scaled resolution.
ScaledTrial scaled_trial(const std::vector<ProjPoint>& points, const std::array<HomogeneousPoly, 3>& map,
                         const BettiData& expected);

ScaledReport scaled_resolution_check(const std::vector<ProjPoint>& points, unsigned w, unsigned trials,
                                     std::uint64_t seed, MapFamily family = MapFamily::PowerComposite);

}  // namespace cuspsyz
