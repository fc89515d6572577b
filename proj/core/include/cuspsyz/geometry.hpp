#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuspsyz/matrix.hpp"
#include "cuspsyz/poly.hpp"

namespace cuspsyz {

// Rows indexed by points, columns by degree-d monomials in deglex order.
// Duplicate points are rejected.
ExactMatrix eval_matrix(const std::vector<ProjPoint>& points, unsigned degree);

enum class SingularityKind { Smooth, Node, Cusp, Other };
const char* singularity_kind_name(SingularityKind kind);

struct Singularity {
  SingularityKind kind;
  // Projective line coefficients (l0, l1, l2) of the cuspidal tangent.
  std::optional<std::array<Scalar, 3>> tangent;
  std::string diagnostic;
};

// Classifies a point of Z(f) from the 3-jet of f in the affine chart of the
// point's first nonzero coordinate. Requires characteristic 0 or > 3.
Singularity classify_singularity(const HomogeneousPoly& f, const ProjPoint& point);

struct CurveSpec {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::vector<HomogeneousPoly> factors;
  // Free-form construction record, serialized verbatim.
  std::vector<std::pair<std::string, std::string>> provenance;

  Field field() const { return Field::prime(p); }
  HomogeneousPoly product() const;
  unsigned degree() const;
};

struct SingularPointsOptions {
  std::size_t point_budget = 1u << 20;
  unsigned threads = 1;
};

struct SingularPointsResult {
  std::vector<ProjPoint> points;  // canonical order
  // Euler's relation does not imply f(P)=0 when p | deg f; points are then
  // still tested against f itself, but the caller may want to know.
  bool degree_divisible_by_p = false;
  std::size_t scanned = 0;
};

// Exhaustive scan of P^2(F_p) for common zeros of f and its partials.
SingularPointsResult singular_points(const HomogeneousPoly& f, const SingularPointsOptions& opts = {});

// Rational points of Z(f) over F_p, canonical order.
std::vector<ProjPoint> rational_zeros(const HomogeneousPoly& f, const SingularPointsOptions& opts = {});

// Restricts f to random lines; a squarefree restriction certifies f
// squarefree. Returns false if every trial line failed. Needs p > deg f.
bool is_squarefree(const HomogeneousPoly& f, Rng& rng, unsigned trials = 24);

struct PullbackResult {
  std::vector<ProjPoint> preimages;  // canonical order
  std::size_t count = 0;
};

// Rational preimages of the targets under z -> (g0(z):g1(z):g2(z)). The
// g_i must share a degree and have no common zero in P^2(F_p).
PullbackResult pullback_points(const std::array<HomogeneousPoly, 3>& g, const std::vector<ProjPoint>& targets);
std::vector<ProjPoint> base_locus(const std::array<HomogeneousPoly, 3>& g);

// X^6+Y^6+Z^6 - 2(X^3Y^3 + Y^3Z^3 + Z^3X^3): nine cusps, all rational when
// the field contains the cube roots of unity.
HomogeneousPoly nine_cusp_sextic(const Field& field);

}  // namespace cuspsyz
