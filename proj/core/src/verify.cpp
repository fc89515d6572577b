#include "cuspsyz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "cuspsyz/constraints.hpp"
#include "cuspsyz/error.hpp"

namespace cuspsyz {

SuiteHooks default_hooks() {
  SuiteHooks h;
  h.defect = [](const BettiData& b, int n) { return defect(b, n); };
  h.normal_form = [](const AdmissibleSeq& s) { return strong_normal_form(s); };
  return h;
}

namespace {

struct Context {
  const SuiteOptions& opts;
  const SuiteHooks& hooks;
  std::vector<BettiData> resolutions;  // everything resolved by criteria 1-3
};

std::string list(const std::vector<unsigned>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::pair<bool, std::string> nine_cusp(Context& ctx) {
  std::ostringstream os;
  bool ok = true;
  for (std::uint64_t p : {13, 19, 31, 37}) {
    Field f = Field::prime(p);
    HomogeneousPoly sextic = nine_cusp_sextic(f);
    SingularPointsOptions scan;
    scan.threads = ctx.opts.threads;
    auto sing = singular_points(sextic, scan).points;
    bool cusps = sing.size() == 9 && std::all_of(sing.begin(), sing.end(), [&](const ProjPoint& pt) {
                   return classify_singularity(sextic, pt).kind == SingularityKind::Cusp;
                 });
    BettiData b = minimal_resolution(sing);
    ctx.resolutions.push_back(b);
    RankReport rep = mw_rank(b, 1);
    bool good = cusps && b.a == std::vector<unsigned>{4, 4, 4, 3} && b.b == std::vector<unsigned>{5, 5, 5} &&
                rep.mw_rank == 6 && rep.alexander_exponent == 3;
    ok = ok && good;
    os << "p=" << p << ": " << sing.size() << " cusps a=" << list(b.a) << " b=" << list(b.b) << " rank "
       << rep.mw_rank << "; ";
  }
  return {ok, os.str()};
}

std::pair<bool, std::string> constructed(Context& ctx) {
  std::ostringstream os;
  bool ok = true;
  AnalyzeOptions ao;
  ao.scan.threads = ctx.opts.threads;
  ConstructOptions co;
  co.scan.threads = ctx.opts.threads;
  for (std::uint64_t p : {31, 61, 101}) {
    unsigned success = 0, failed = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      try {
        CuspidalCurve c = construct_cuspidal(1, p, seed, 0, co);
        ao.seed = seed;
        RankReport rep = analyze_curve(c.curve, ao);
        ctx.resolutions.push_back(rep.betti);
        ++success;
        bool good = rep.cusps.size() == 6 && rep.betti.a == std::vector<unsigned>{3, 2} &&
                    rep.betti.b == std::vector<unsigned>{5} && rep.mw_rank == 2;
        if (!good) os << "p=" << p << " seed=" << seed << " gave " << rep.betti.to_string() << "; ";
        ok = ok && good;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ConstructionFailed) throw;
        ++failed;
      }
    }
    os << "k=1 p=" << p << ": " << success << "/5 constructed; ";
    ok = ok && success > 0;
  }
  unsigned success = 0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    try {
      CuspidalCurve c = construct_cuspidal(2, 101, seed, 0, co);
      ao.seed = seed;
      RankReport rep = analyze_curve(c.curve, ao);
      ctx.resolutions.push_back(rep.betti);
      ++success;
      bool good = rep.cusps.size() == 24 && rep.mw_rank >= 2 && !rep.betti.b.empty() && rep.betti.b.front() == 10;
      os << "k=2 seed=" << seed << ": a=" << list(rep.betti.a) << " b=" << list(rep.betti.b) << " rank "
         << rep.mw_rank << "; ";
      ok = ok && good;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ConstructionFailed) throw;
    }
  }
  ok = ok && success > 0;
  return {ok, os.str()};
}

std::pair<bool, std::string> defect_oracle(Context& ctx) {
  Field field = Field::prime(101);
  const auto pts = all_points(field);
  Rng rng(ctx.opts.seed);
  std::size_t checks = 0, mismatches = 0;
  std::string first;
  for (int set = 0; set < 200; ++set) {
    std::size_t size = 1 + rng.uniform(25);
    std::set<std::size_t> chosen;
    while (chosen.size() < size) chosen.insert(rng.uniform(pts.size()));
    std::vector<ProjPoint> sigma;
    for (auto i : chosen) sigma.push_back(pts[i]);
    BettiData b = minimal_resolution(sigma);
    ctx.resolutions.push_back(b);
    int top = static_cast<int>(b.b.empty() ? b.a.front() : b.b.front());
    for (int n = 3; n <= top + 3; ++n) {
      long long expected = static_cast<long long>(sigma.size()) - static_cast<long long>(eval_matrix(sigma, n - 3).rank());
      long long got = ctx.hooks.defect(b, n);
      ++checks;
      if (got != expected) {
        if (!mismatches++)
          first = "first mismatch: " + std::to_string(size) + " points, n=" + std::to_string(n) + " defect " +
                  std::to_string(got) + " vs " + std::to_string(expected);
      }
    }
  }
  std::string detail = std::to_string(checks) + " comparisons, " + std::to_string(mismatches) + " mismatches";
  if (!first.empty()) detail += "; " + first;
  return {mismatches == 0, detail};
}

std::pair<bool, std::string> identities(Context& ctx) {
  std::size_t bad = 0;
  std::string first;
  for (const auto& b : ctx.resolutions) {
    auto v = betti_violations(b);
    if (!v.empty() && !bad++) first = b.to_string() + ": " + v.front();
  }
  std::string detail = std::to_string(ctx.resolutions.size()) + " resolutions, " + std::to_string(bad) + " violating";
  if (ctx.resolutions.empty()) return {false, "no resolutions collected (criteria 1-3 not run)"};
  if (!first.empty()) detail += "; " + first;
  return {bad == 0, detail};
}

std::pair<bool, std::string> nodal(Context& ctx) {
  Field field = Field::prime(101);
  Rng rng(ctx.opts.seed ^ 0x5eedULL);
  std::ostringstream os;
  bool ok = true;
  for (unsigned c = 2; c <= 4; ++c) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::array<Scalar, 3>> lines;
      auto det3 = [](const std::array<Scalar, 3>& x, const std::array<Scalar, 3>& y, const std::array<Scalar, 3>& z) {
        return x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) +
               x[2] * (y[0] * z[1] - y[1] * z[0]);
      };
      for (int attempt = 0; lines.size() < c; ++attempt) {
        if (attempt > 1000) fail(ErrorKind::Internal, "could not place lines in general position");
        std::array<Scalar, 3> l{field.random(rng), field.random(rng), field.random(rng)};
        if (l[0].is_zero() && l[1].is_zero() && l[2].is_zero()) continue;
        bool general = true;
        for (std::size_t i = 0; i < lines.size() && general; ++i) {
          const auto& m = lines[i];
          bool prop = (l[0] * m[1] - l[1] * m[0]).is_zero() && (l[0] * m[2] - l[2] * m[0]).is_zero() &&
                      (l[1] * m[2] - l[2] * m[1]).is_zero();
          if (prop) general = false;
          for (std::size_t j = i + 1; j < lines.size() && general; ++j)
            if (det3(l, m, lines[j]).is_zero()) general = false;
        }
        if (general) lines.push_back(l);
      }
      HomogeneousPoly f = HomogeneousPoly::monomial(field, {0, 0, 0}, field.one());
      for (const auto& l : lines) {
        HomogeneousPoly lin(field, 1);
        for (int i = 0; i < 3; ++i) {
          Exponent e{};
          e[i] = 1;
          lin.add_term(e, l[i]);
        }
        f = f * lin;
      }
      auto nodes = singular_points(f).points;
      bool all_nodes = nodes.size() == c * (c - 1) / 2 &&
                       std::all_of(nodes.begin(), nodes.end(), [&](const ProjPoint& pt) {
                         return classify_singularity(f, pt).kind == SingularityKind::Node;
                       });
      BettiData b = minimal_resolution(nodes);
      bool good = all_nodes;
      try {
        NodalCheck nc = nodal_component_check(b, c, c);
        good = good && nc.b_equal_d == c - 1;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Contradiction) throw;
        good = false;
      }
      if (!good) os << "c=" << c << " trial " << trial << " b=" << list(b.b) << "; ";
      if (trial == 0) os << "c=" << c << ": a=" << list(b.a) << " b=" << list(b.b) << "; ";
      ok = ok && good;
    }
  }
  return {ok, os.str()};
}

std::pair<bool, std::string> k1_table(Context& ctx) {
  std::ostringstream os;
  bool ok = true;
  EnumerateOptions eo;
  eo.threads = ctx.opts.threads;
  const long long expected[] = {6, 8, 9};
  for (unsigned r = 1; r <= 4; ++r) {
    auto seqs = enumerate_strongly_admissible(1, r, 9, eo);
    std::optional<long long> best;
    for (const auto& s : seqs)
      if (!best || s.c_value() < *best) best = s.c_value();
    if (r <= 3) {
      SurdBound f = min_cusps_formula(1, r);
      bool good = best && *best == expected[r - 1] && f.finite && f.ceiling == static_cast<long>(expected[r - 1]);
      ok = ok && good;
      os << "r=" << r << ": min " << (best ? std::to_string(*best) : "none") << ", formula ceil "
         << (f.finite ? f.ceiling.get_str() : "-") << "; ";
    } else {
      ok = ok && seqs.empty();
      os << "r=4: " << seqs.size() << " sequences; ";
    }
  }
  std::size_t cases = 0, bad = 0;
  std::string first;
  for (unsigned k = 1; k <= 2; ++k) {
    for (unsigned r = 1; r <= 5 * k; ++r) {
      for (const auto& s : enumerate_strongly_admissible(k, r, m_bound(6 * k), eo)) {
        ++cases;
        std::string why;
        try {
          AdmissibleSeq nf = ctx.hooks.normal_form(s);
          if (normal_form_shape(nf) == 0)
            why = "not in a normal shape";
          else if (!is_strongly(nf) || nf.k != s.k || nf.r != s.r || nf.d0() != s.d0())
            why = "left the strongly admissible class";
          else if (nf.c_value() > s.c_value())
            why = "c increased to " + std::to_string(nf.c_value());
        } catch (const Error& e) {
          why = e.what();
        }
        if (!why.empty() && !bad++) first = s.to_string() + " r=" + std::to_string(r) + ": " + why;
      }
    }
  }
  os << "normal form: " << cases << " cases, " << bad << " bad";
  if (!first.empty()) os << "; " << first;
  return {ok && bad == 0 && cases > 0, os.str()};
}

std::pair<bool, std::string> lemexcl(Context&) {
  auto pairs = lemexcl_scan(5);
  std::ostringstream os;
  os << "surviving pairs:";
  for (const auto& [k, r] : pairs) os << " (" << k << "," << r << ")";
  bool ok = pairs == std::vector<std::pair<unsigned, unsigned>>{{1, 3}};
  return {ok, os.str()};
}

std::pair<bool, std::string> exact_bounds(Context&) {
  std::ostringstream os;
  bool ok = langer_floor(6) == 9 && m_of(6) == 3;
  os << "langer_floor(6)=" << langer_floor(6) << " m_of(6)=" << m_of(6) << "; ";
  unsigned bad = 0;
  for (unsigned k = 1; k <= 50; ++k) {
    SurdBound b = min_cusps_formula(k, 1);
    if (!b.finite || b.value.compare(Rational(6 * k * k)) != 0) ++bad;
  }
  os << "formula(k,1)=6k^2 failures " << bad << "; ";
  GBound g = g_bound(100);
  Rational lo = g.half_lo / 100, hi = g.half_hi / 100, rlo = g.rank_lo / 100, rhi = g.rank_hi / 100;
  bool half = lo >= Rational(26, 10) && hi <= Rational(28, 10) && hi - lo <= Rational(1, 1000) * 2;
  bool rank = rlo >= Rational(52, 10) && rhi <= Rational(55, 10) && rhi - rlo <= Rational(1, 1000) * 2;
  auto [slo, shi] = g_slope_bracket(3);
  bool limit = slo <= Rational(2675, 1000) && shi >= Rational(2665, 1000) && 2 * slo <= Rational(5345, 1000) &&
               2 * shi >= Rational(5335, 1000);
  os << "k=100 half-rank/k in [" << lo.get_d() << ", " << hi.get_d() << "], rank/k in [" << rlo.get_d() << ", "
     << rhi.get_d() << "], limit slope in [" << slo.get_d() << ", " << shi.get_d() << "]";
  return {ok && bad == 0 && half && rank && limit, os.str()};
}

std::pair<bool, std::string> non_strong(Context& ctx) {
  std::ostringstream os;
  bool ok = true;
  for (const auto& id : symbolic_identities()) {
    ok = ok && id.holds;
    os << id.name << (id.holds ? " holds; " : " FAILS; ");
  }
  EnumerateOptions eo;
  eo.threads = ctx.opts.threads;
  eo.strong_only = false;
  std::size_t total = 0, reduced = 0, excluded = 0, falsified = 0, ungated_counter = 0;
  for (unsigned r = 1; r <= 5; ++r) {
    auto res = enumerate_sequences(1, r, 9, eo);
    if (!res.complete) fail(ErrorKind::Resource, "enumeration budget exhausted");
    for (const auto& s : res.sequences) {
      if (is_strongly(s)) continue;
      ++total;
      NonStrongOptions gated;
      gated.enumerate.threads = ctx.opts.threads;
      try {
        auto out = non_strong_reduction(s, gated);
        if (out.status == NonStrongOutcome::Status::ExcludedByConstraints) {
          ++excluded;
        } else {
          ++reduced;
          if (!out.strong || !is_strongly(*out.strong) || out.strong->c_value() > s.c_value() || out.strong->r != r)
            ok = false;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Falsification) throw;
        ++falsified;
        os << "falsified by " << s.to_string() << "; ";
      }
      NonStrongOptions ungated = gated;
      ungated.gate_on_constraints = false;
      try {
        non_strong_reduction(s, ungated);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Falsification) throw;
        ++ungated_counter;
      }
    }
  }
  os << total << " non-strong sequences: " << reduced << " reduced, " << excluded << " excluded by constraints, "
     << falsified << " falsifications; without the constraint gate " << ungated_counter << " have no reduction";
  return {ok && falsified == 0 && total > 0, os.str()};
}

std::pair<bool, std::string> scaling(Context& ctx) {
  Field f = Field::prime(101);
  auto P = [&](long x, long y, long z) { return ProjPoint(f.from_int(x), f.from_int(y), f.from_int(z)); };
  std::vector<ProjPoint> fixture{P(1, 1, 1), P(1, 4, 9), P(1, 9, 16)};
  ScaledReport rep = scaled_resolution_check(fixture, 2, 20, ctx.opts.seed);
  std::ostringstream os;
  os << "verdict " << rep.verdict << ", " << rep.successes << "/" << rep.trials.size() << " successes, "
     << rep.mismatches << " mismatches; expected " << rep.expected.to_string();
  return {rep.verdict == "success", os.str()};
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::pair<bool, std::string> (*run)(Context&);
};

const Criterion kCriteria[] = {
    {1, "nine-cusp sextic resolution", 1, nine_cusp},
    {2, "constructed cuspidal family", 60, constructed},
    {3, "defect oracle", 120, defect_oracle},
    {4, "resolution identities", 1, identities},
    {5, "nodal syzygies", 10, nodal},
    {6, "k=1 cusp-count table and normal form", 30, k1_table},
    {7, "maximal syzygy exclusion scan", 5, lemexcl},
    {8, "exact bound values", 5, exact_bounds},
    {9, "non-strong reduction", 60, non_strong},
    {10, "scaling property", 120, scaling},
};

}  // namespace

std::vector<CriterionResult> run_reproduction_suite(const SuiteOptions& opts, const SuiteHooks& hooks) {
  SuiteHooks h = hooks;
  SuiteHooks d = default_hooks();
  if (!h.defect) h.defect = d.defect;
  if (!h.normal_form) h.normal_form = d.normal_form;
  Context ctx{opts, h, {}};
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), c.id) == opts.only.end()) continue;
    auto start = std::chrono::steady_clock::now();
    CriterionResult r{c.id, c.name, false, "", 0, c.limit};
    try {
      auto [pass, detail] = c.run(ctx);
      r.pass = pass;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opts.enforce_time && r.seconds > r.limit_seconds) {
      r.pass = false;
      r.detail += "; over time limit";
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cuspsyz
