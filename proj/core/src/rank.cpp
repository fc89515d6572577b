#include "cuspsyz/rank.hpp"

#include <algorithm>
#include <sstream>

#include "cuspsyz/error.hpp"

namespace cuspsyz {

namespace {

long long tri(long long x) { return (x + 1) * (x + 2); }

std::string str(const Rational& q) { return q.get_str(); }

}  // namespace

long long defect(const BettiData& betti, int n) {
  long long s = 0;
  for (unsigned b : betti.b)
    if (static_cast<int>(b) >= n) s += tri(static_cast<long long>(b) - n);
  for (unsigned a : betti.a)
    if (static_cast<int>(a) >= n) s -= tri(static_cast<long long>(a) - n);
  return s / 2;
}

RankReport mw_rank(const BettiData& betti, unsigned k) {
  if (k == 0) fail(ErrorKind::Precondition, "k must be positive");
  const unsigned K = 5 * k;
  for (unsigned b : betti.b)
    if (b > K)
      fail(ErrorKind::Contradiction, "syzygy degree " + std::to_string(b) + " exceeds 5k=" + std::to_string(K) +
                                         ": not the cusp ideal of a degree-6k cuspidal curve");
  for (unsigned a : betti.a)
    if (a >= K)
      fail(ErrorKind::Contradiction, "generator degree " + std::to_string(a) + " is at least 5k=" +
                                         std::to_string(K) + ": not the cusp ideal of a degree-6k cuspidal curve");
  RankReport rep;
  rep.k = k;
  rep.betti = betti;
  long long top = std::count(betti.b.begin(), betti.b.end(), K);
  rep.mw_rank = 2 * top;
  rep.alexander_exponent = top;
  rep.defect = defect(betti, static_cast<int>(K));
  rep.checks.push_back({"b_le_5k", true, "max b = " + std::to_string(betti.b.empty() ? 0 : betti.b.front())});
  rep.checks.push_back({"a_lt_5k", true, "max a = " + std::to_string(betti.a.empty() ? 0 : betti.a.front())});
  rep.checks.push_back({"defect_matches_top_syzygies", rep.defect == top,
                        "defect(5k) = " + std::to_string(rep.defect) + ", #{b_i = 5k} = " + std::to_string(top)});
  rep.checks.push_back({"shioda_tate", rep.mw_rank <= 10 * static_cast<long long>(k) - 2,
                        "rank " + std::to_string(rep.mw_rank) + " <= " + std::to_string(10 * k - 2)});
  if (betti.point_count > 0) {
    BezoutCheck bz = bezout_cusp_check(betti, 6 * k);
    rep.checks.push_back({"bezout_cusp_bound", bz.pass,
                          std::to_string(betti.point_count) + " <= " + str(bz.bound) + " (slack " + str(bz.slack) + ")"});
    rep.checks.push_back({"display_cusp_bound", bz.display_pass,
                          std::to_string(betti.point_count) + " <= " + str(bz.display_bound) + " (slack " +
                              str(bz.display_slack) + ")"});
  }
  return rep;
}

BezoutCheck bezout_cusp_check(const BettiData& betti, unsigned d, MPolicy policy) {
  if (betti.a.empty()) fail(ErrorKind::MalformedInput, "betti data without generators");
  Rational D0 = betti.a.back();
  Rational half_d(d, 2);
  half_d.canonicalize();
  Rational n = static_cast<unsigned long>(betti.point_count);
  BezoutCheck c;
  c.bound = std::min<Rational>(D0 * half_d, Rational(static_cast<long>(m_bound(d, policy))));
  c.slack = c.bound - n;
  c.pass = c.slack >= 0;
  Rational disp(5 * static_cast<long>(d) - 6, 8);
  disp.canonicalize();
  c.display_bound = std::min(D0, disp) * half_d;
  c.display_slack = c.display_bound - n;
  c.display_pass = c.display_slack >= 0;
  return c;
}

NodalCheck nodal_component_check(const BettiData& betti, unsigned d, long long components) {
  for (unsigned b : betti.b)
    if (b > d)
      fail(ErrorKind::Contradiction,
           "node syzygy degree " + std::to_string(b) + " exceeds the curve degree " + std::to_string(d));
  std::size_t top = std::count(betti.b.begin(), betti.b.end(), d);
  if (static_cast<long long>(top) != components - 1)
    fail(ErrorKind::Contradiction, "#{b_i = d} = " + std::to_string(top) + " but the curve has " +
                                       std::to_string(components) + " components");
  return {components, top};
}

RankReport analyze_curve(const CurveSpec& curve, const AnalyzeOptions& opts) {
  if (curve.k == 0) fail(ErrorKind::MalformedInput, "k must be positive");
  Field field = curve.field();
  if (curve.degree() != 6 * curve.k)
    fail(ErrorKind::MalformedInput, "curve degree " + std::to_string(curve.degree()) + " differs from 6k");
  for (const auto& g : curve.factors)
    if (g.is_zero() || g.field() != field) fail(ErrorKind::MalformedInput, "invalid curve factor");
  HomogeneousPoly f = curve.product();
  Rng rng(opts.seed);
  if (!is_squarefree(f, rng)) fail(ErrorKind::MalformedInput, "curve is not reduced (squarefree test failed)");

  SingularPointsResult sing = singular_points(f, opts.scan);
  std::vector<ProjPoint> cusps;
  std::vector<std::string> bad;
  std::size_t nodes = 0;
  for (const auto& pt : sing.points) {
    Singularity s = classify_singularity(f, pt);
    if (s.kind == SingularityKind::Cusp)
      cusps.push_back(pt);
    else if (s.kind == SingularityKind::Node)
      ++nodes;
    else
      bad.push_back(pt.to_string() + " (" + s.diagnostic + ")");
  }
  if (!bad.empty()) {
    std::ostringstream os;
    os << "singularities worse than A2 at";
    for (const auto& b : bad) os << " " << b;
    fail(ErrorKind::UnsupportedCurve, os.str());
  }

  RankReport rep;
  std::vector<std::size_t> hilbert;
  BettiData betti = BettiData::unit_ideal();
  if (!cusps.empty()) {
    Resolution res = resolve(cusps);
    betti = res.betti;
    hilbert = res.hilbert;
  }
  rep = mw_rank(betti, curve.k);
  rep.cusps = cusps;
  rep.hilbert = hilbert;

  long long coker = 0;
  if (!cusps.empty())
    coker = static_cast<long long>(cusps.size()) -
            static_cast<long long>(eval_matrix(cusps, 5 * curve.k - 3).rank());
  rep.checks.push_back({"coker_equals_defect", coker == rep.defect,
                        "#cusps - rank(eval, 5k-3) = " + std::to_string(coker)});
  rep.checks.push_back({"singular_scan", !sing.degree_divisible_by_p,
                        std::to_string(cusps.size()) + " cusps, " + std::to_string(nodes) + " nodes" +
                            (sing.degree_divisible_by_p ? "; p divides the degree, Euler relation degenerate" : "")});
  bool constructed = std::any_of(curve.provenance.begin(), curve.provenance.end(),
                                 [](const auto& kv) { return kv.first == "method" && kv.second == "f1^3+f2^2"; });
  if (constructed)
    rep.checks.push_back({"constructed_rank_at_least_2", rep.mw_rank >= 2,
                          rep.mw_rank > 2 ? "rank exceeds 2: non-generic draw" : "rank " + std::to_string(rep.mw_rank)});
  return rep;
}

}  // namespace cuspsyz
