#include "cuspsyz/construct.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cuspsyz/error.hpp"

namespace cuspsyz {

AssembleResult assemble_cuspidal(const HomogeneousPoly& f1, const HomogeneousPoly& f2, std::size_t required,
                                 Rng& rng, const SingularPointsOptions& scan) {
  AssembleResult r;
  if (f1.is_zero() || f2.is_zero()) {
    r.category = "zero factor";
    r.reason = "zero factor";
    return r;
  }
  if (2 * f2.degree() != 3 * f1.degree()) fail(ErrorKind::MalformedInput, "need deg f2 = 3/2 deg f1");
  std::vector<ProjPoint> common;
  for (const auto& pt : rational_zeros(f1, scan))
    if (f2.evaluate(pt).is_zero()) common.push_back(pt);
  std::size_t bezout = static_cast<std::size_t>(f1.degree()) * f2.degree();
  if (common.size() > bezout) {
    r.category = "shared component";
    r.reason = "f1 and f2 share a component";
    return r;
  }
  if (common.size() < required) {
    r.category = "residual not rational";
    r.reason = "only " + std::to_string(common.size()) + " rational intersection points";
    return r;
  }
  HomogeneousPoly f = f1.pow(3) + f2.pow(2);
  if (!is_squarefree(f, rng)) {
    r.category = "not squarefree";
    r.reason = "f is not squarefree";
    return r;
  }
  for (const auto& pt : common) {
    Singularity s = classify_singularity(f, pt);
    if (s.kind != SingularityKind::Cusp) {
      r.category = "non-transversal";
      r.reason = "intersection at " + pt.to_string() + " is not transversal (" + singularity_kind_name(s.kind) + ")";
      return r;
    }
  }
  auto sing = singular_points(f, scan);
  if (sing.points != common) {
    r.category = "extra singularities";
    r.reason = "f has " + std::to_string(sing.points.size()) + " rational singular points, expected " +
               std::to_string(common.size());
    return r;
  }
  r.ok = true;
  r.reason = "ok";
  r.cusps = std::move(common);
  return r;
}

CuspidalCurve construct_cuspidal(unsigned k, std::uint64_t p, std::uint64_t seed, std::size_t target,
                                 const ConstructOptions& opts) {
  if (k == 0) fail(ErrorKind::Precondition, "k must be positive");
  Field field = Field::prime(p);
  if (k % p == 0) fail(ErrorKind::Precondition, "p must not divide 6k");
  const std::size_t full = 6 * static_cast<std::size_t>(k) * k;
  if (target == 0) target = full;
  if (target > full) fail(ErrorKind::Precondition, "target exceeds 6k^2");
  if (p <= 6 * k) fail(ErrorKind::Precondition, "need p > 6k for the squarefree test");

  Rng rng(seed);
  const unsigned d1 = 2 * k, d2 = 3 * k;
  const std::size_t multiples = monomial_count(k);  // dim f1 * S_k
  std::map<std::string, unsigned> rejections;
  for (unsigned attempt = 1; attempt <= opts.max_attempts; ++attempt) {
    HomogeneousPoly f1 = HomogeneousPoly::random(field, d1, rng);
    if (!singular_points(f1, opts.scan).points.empty()) {
      ++rejections["f1 singular"];
      continue;
    }
    std::vector<ProjPoint> on_f1 = rational_zeros(f1, opts.scan);
    rng.shuffle(on_f1);

    // Add points of Z(f1) until the degree-3k forms through them are f1*S_k
    // plus a single extra direction; the residual intersection is then fixed.
    std::vector<ProjPoint> chosen;
    std::vector<Vector> kernel;
    EchelonBasis conditions(field, monomial_count(d2));
    for (const auto& pt : on_f1) {
      ExactMatrix single = eval_matrix({pt}, d2);
      Vector row(single.cols(), field.zero());
      for (std::size_t c = 0; c < single.cols(); ++c) row[c] = single.at(0, c);
      if (!conditions.insert(row)) continue;
      chosen.push_back(pt);
      if (monomial_count(d2) - conditions.size() == multiples + 1) break;
    }
    if (monomial_count(d2) - conditions.size() != multiples + 1) {
      ++rejections["too few rational points on f1"];
      continue;
    }
    kernel = eval_matrix(chosen, d2).kernel_basis();
    EchelonBasis ideal(field, monomial_count(d2));
    for (const auto& m : monomials(k)) ideal.insert((f1 * HomogeneousPoly::monomial(field, m, field.one())).coefficients());
    Vector combo(monomial_count(d2), field.zero());
    for (const auto& v : kernel) {
      Scalar c = field.random(rng);
      for (std::size_t i = 0; i < combo.size(); ++i) combo[i] += c * v[i];
    }
    if (ideal.contains(combo)) {
      ++rejections["f2 in (f1)"];
      continue;
    }
    HomogeneousPoly f2 = HomogeneousPoly::from_coefficients(field, d2, combo);
    AssembleResult a = assemble_cuspidal(f1, f2, target, rng, opts.scan);
    if (!a.ok) {
      ++rejections[a.category];
      continue;
    }
    CuspidalCurve out;
    out.curve.p = p;
    out.curve.k = k;
    out.curve.factors = {f1.pow(3) + f2.pow(2)};
    out.curve.provenance = {{"method", "f1^3+f2^2"},
                            {"seed", std::to_string(seed)},
                            {"attempts", std::to_string(attempt)},
                            {"f1", f1.to_string()},
                            {"f2", f2.to_string()}};
    out.f1 = std::move(f1);
    out.f2 = std::move(f2);
    out.cusps = std::move(a.cusps);
    out.attempts = attempt;
    return out;
  }
  std::ostringstream os;
  os << "no cuspidal curve of degree " << 6 * k << " with " << target << " rational cusps over F_" << p << " after "
     << opts.max_attempts << " attempts";
  for (const auto& [why, n] : rejections) os << "; " << why << ": " << n;
  os << " (a larger p makes rational residual points likelier)";
  fail(ErrorKind::ConstructionFailed, os.str());
}

}  // namespace cuspsyz
