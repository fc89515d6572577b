#include "cuspsyz/geometry.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "cuspsyz/error.hpp"

namespace cuspsyz {

namespace {

// f over F_p flattened for the hot enumeration loops.
struct PrimeForm {
  std::uint64_t p;
  unsigned degree;
  std::vector<std::pair<Exponent, std::uint64_t>> terms;

  explicit PrimeForm(const HomogeneousPoly& f) : p(f.field().characteristic()), degree(f.degree()) {
    for (const auto& [e, c] : f.terms()) terms.emplace_back(e, c.residue());
  }

  std::uint64_t eval(const std::array<std::vector<std::uint64_t>, 3>& pw) const {
    std::uint64_t s = 0;
    for (const auto& [e, c] : terms) s = (s + c * pw[0][e[0]] % p * pw[1][e[1]] % p * pw[2][e[2]]) % p;
    return s;
  }
};

void fill_powers(std::array<std::vector<std::uint64_t>, 3>& pw, const std::array<std::uint64_t, 3>& z,
                 unsigned degree, std::uint64_t p) {
  for (int i = 0; i < 3; ++i) {
    pw[i].resize(degree + 1);
    pw[i][0] = 1;
    for (unsigned k = 1; k <= degree; ++k) pw[i][k] = pw[i][k - 1] * z[i] % p;
  }
}

// Point number n of P^2(F_p) in canonical order.
std::array<std::uint64_t, 3> point_at(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return {0, 0, 1};
  if (n <= p) return {0, 1, n - 1};
  n -= p + 1;
  return {1, n / p, n % p};
}

template <class Pred>
std::vector<ProjPoint> scan(std::uint64_t p, std::size_t budget, unsigned threads, unsigned degree, Pred pred) {
  std::uint64_t total = p * p + p + 1;
  if (total > budget)
    fail(ErrorKind::Resource, "enumerating P^2(F_" + std::to_string(p) + ") needs " + std::to_string(total) +
                                  " points, budget is " + std::to_string(budget));
  threads = std::max(1u, std::min<unsigned>(threads, 64));
  std::vector<std::vector<std::array<std::uint64_t, 3>>> found(threads);
  auto work = [&](unsigned w) {
    std::array<std::vector<std::uint64_t>, 3> pw;
    std::uint64_t lo = total * w / threads, hi = total * (w + 1) / threads;
    for (std::uint64_t n = lo; n < hi; ++n) {
      auto z = point_at(n, p);
      fill_powers(pw, z, degree, p);
      if (pred(pw)) found[w].push_back(z);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<ProjPoint> out;
  for (const auto& chunk : found)
    for (const auto& z : chunk) out.emplace_back(Scalar(z[0], p), Scalar(z[1], p), Scalar(z[2], p));
  return out;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

using UPoly = std::vector<std::uint64_t>;  // ascending coefficients over F_p

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

UPoly umod(UPoly a, const UPoly& b, std::uint64_t p) {
  std::uint64_t inv = mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t f = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - f * b[i] % p) % p;
    trim(a);
  }
  return a;
}

std::size_t ugcd_degree(UPoly a, UPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

}  // namespace

ExactMatrix eval_matrix(const std::vector<ProjPoint>& points, unsigned degree) {
  if (points.empty()) fail(ErrorKind::MalformedInput, "evaluation matrix of an empty point set");
  Field field = points[0].field();
  std::set<ProjPoint> seen;
  for (const auto& pt : points) {
    if (pt.field() != field) fail(ErrorKind::MalformedInput, "points over different fields");
    if (!seen.insert(pt).second) fail(ErrorKind::DuplicatePoint, "duplicate point " + pt.to_string());
  }
  const auto& mons = monomials(degree);
  ExactMatrix m(field, points.size(), mons.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    std::array<std::vector<Scalar>, 3> pw;
    for (int i = 0; i < 3; ++i) {
      pw[i].push_back(field.one());
      for (unsigned k = 1; k <= degree; ++k) pw[i].push_back(pw[i].back() * points[r][i]);
    }
    for (std::size_t c = 0; c < mons.size(); ++c)
      m.at(r, c) = pw[0][mons[c][0]] * pw[1][mons[c][1]] * pw[2][mons[c][2]];
  }
  return m;
}

const char* singularity_kind_name(SingularityKind kind) {
  switch (kind) {
    case SingularityKind::Smooth: return "smooth";
    case SingularityKind::Node: return "node";
    case SingularityKind::Cusp: return "cusp";
    case SingularityKind::Other: return "other";
  }
  return "?";
}

Singularity classify_singularity(const HomogeneousPoly& f, const ProjPoint& point) {
  const Field field = f.field();
  if (point.field() != field) fail(ErrorKind::MalformedInput, "point and curve over different fields");
  if (field.is_prime_field() && field.characteristic() <= 3)
    fail(ErrorKind::Precondition, "classification needs characteristic 0 or > 3");
  const int i = point.chart();
  const int j = (i + 1) % 3 < (i + 2) % 3 ? (i + 1) % 3 : (i + 2) % 3;
  const int l = 3 - i - j;
  const Scalar& pj = point[j];
  const Scalar& pl = point[l];

  // c[a][b] is the coefficient of u^a v^b with z_j = p_j + u, z_l = p_l + v.
  std::array<std::array<Scalar, 4>, 4> c;
  for (auto& row : c) row.fill(field.zero());
  for (const auto& [e, coef] : f.terms()) {
    for (unsigned a = 0; a <= std::min(3u, e[j]); ++a) {
      Scalar ta = coef * field.from_int(static_cast<long long>(binomial(e[j], a))) * pj.pow(e[j] - a);
      if (ta.is_zero()) continue;
      for (unsigned b = 0; a + b <= 3 && b <= e[l]; ++b)
        c[a][b] += ta * field.from_int(static_cast<long long>(binomial(e[l], b))) * pl.pow(e[l] - b);
    }
  }
  if (!c[0][0].is_zero()) fail(ErrorKind::NotOnCurve, "point " + point.to_string() + " is not on the curve");
  if (!c[1][0].is_zero() || !c[0][1].is_zero()) return {SingularityKind::Smooth, std::nullopt, "nonzero linear part"};

  const Scalar &alpha = c[2][0], &beta = c[1][1], &gamma = c[0][2];
  if (alpha.is_zero() && beta.is_zero() && gamma.is_zero())
    return {SingularityKind::Other, std::nullopt, "vanishing quadratic part (multiplicity >= 3)"};
  Scalar disc = beta * beta - field.from_int(4) * alpha * gamma;
  if (!disc.is_zero()) return {SingularityKind::Node, std::nullopt, "nondegenerate quadratic part"};

  // Quadratic part is a square of lu*u + lv*v; cusp iff that line does not
  // divide the cubic part.
  Scalar lu = field.one(), lv = field.zero();
  bool divides;
  if (!alpha.is_zero()) {
    Scalar mu = beta / (field.from_int(2) * alpha);
    lv = mu;
    Scalar t = -mu;
    Scalar cubic_at = c[3][0] * t.pow(3) + c[2][1] * t * t + c[1][2] * t + c[0][3];
    divides = cubic_at.is_zero();
  } else {
    lu = field.zero();
    lv = field.one();
    divides = c[3][0].is_zero();
  }
  if (divides) return {SingularityKind::Other, std::nullopt, "tangent line divides the cubic term"};

  std::array<Scalar, 3> line{field.zero(), field.zero(), field.zero()};
  line[j] = lu;
  line[l] = lv;
  line[i] = -(lu * pj) - lv * pl;
  ProjPoint normalized(line);
  return {SingularityKind::Cusp, normalized.coords(), "ordinary cusp"};
}

HomogeneousPoly CurveSpec::product() const {
  if (factors.empty()) fail(ErrorKind::MalformedInput, "curve has no factors");
  HomogeneousPoly f = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) f = f * factors[i];
  return f;
}

unsigned CurveSpec::degree() const {
  unsigned d = 0;
  for (const auto& g : factors) d += g.degree();
  return d;
}

SingularPointsResult singular_points(const HomogeneousPoly& f, const SingularPointsOptions& opts) {
  if (!f.field().is_prime_field()) fail(ErrorKind::Precondition, "singular point enumeration needs F_p");
  if (f.is_zero()) fail(ErrorKind::MalformedInput, "zero polynomial");
  const std::uint64_t p = f.field().characteristic();
  PrimeForm F(f), F0(f.derivative(0)), F1(f.derivative(1)), F2(f.derivative(2));
  SingularPointsResult res;
  res.degree_divisible_by_p = f.degree() % p == 0;
  res.points = scan(p, opts.point_budget, opts.threads, f.degree(), [&](const auto& pw) {
    return F0.eval(pw) == 0 && F1.eval(pw) == 0 && F2.eval(pw) == 0 && F.eval(pw) == 0;
  });
  res.scanned = p * p + p + 1;
  return res;
}

std::vector<ProjPoint> rational_zeros(const HomogeneousPoly& f, const SingularPointsOptions& opts) {
  if (!f.field().is_prime_field()) fail(ErrorKind::Precondition, "zero enumeration needs F_p");
  PrimeForm F(f);
  return scan(f.field().characteristic(), opts.point_budget, opts.threads, f.degree(),
              [&](const auto& pw) { return F.eval(pw) == 0; });
}

bool is_squarefree(const HomogeneousPoly& f, Rng& rng, unsigned trials) {
  if (!f.field().is_prime_field()) fail(ErrorKind::Precondition, "squarefree test implemented over F_p");
  const std::uint64_t p = f.field().characteristic();
  const unsigned n = f.degree();
  if (p <= n) fail(ErrorKind::Precondition, "squarefree test needs p > degree");
  if (f.is_zero()) return false;
  if (n <= 1) return true;
  PrimeForm F(f);
  for (unsigned t = 0; t < trials; ++t) {
    std::array<std::uint64_t, 3> A{rng.uniform(p), rng.uniform(p), rng.uniform(p)};
    std::array<std::uint64_t, 3> B{rng.uniform(p), rng.uniform(p), rng.uniform(p)};
    std::array<std::vector<std::uint64_t>, 3> pw;
    fill_powers(pw, A, n, p);
    if (F.eval(pw) == 0) continue;
    // h(x) = f(x A + B)
    std::array<std::vector<UPoly>, 3> lp;
    for (int i = 0; i < 3; ++i) {
      UPoly lin{B[i], A[i]};
      trim(lin);
      lp[i].push_back({1});
      for (unsigned k = 1; k <= n; ++k) lp[i].push_back(umul(lp[i].back(), lin, p));
    }
    UPoly h(n + 1, 0);
    for (const auto& [e, c] : F.terms) {
      UPoly m = umul(umul(lp[0][e[0]], lp[1][e[1]], p), lp[2][e[2]], p);
      for (std::size_t i = 0; i < m.size(); ++i) h[i] = (h[i] + c * m[i]) % p;
    }
    trim(h);
    if (h.size() != n + 1) continue;
    UPoly dh(n, 0);
    for (unsigned i = 1; i <= n; ++i) dh[i - 1] = h[i] * i % p;
    if (ugcd_degree(h, dh, p) == 0) return true;
  }
  return false;
}

std::vector<ProjPoint> base_locus(const std::array<HomogeneousPoly, 3>& g) {
  const Field field = g[0].field();
  if (!field.is_prime_field()) fail(ErrorKind::Precondition, "base locus enumeration needs F_p");
  for (const auto& gi : g)
    if (gi.field() != field || gi.degree() != g[0].degree())
      fail(ErrorKind::InvalidMap, "map components must share a field and a degree");
  PrimeForm G0(g[0]), G1(g[1]), G2(g[2]);
  return scan(field.characteristic(), std::size_t{1} << 22, 1, g[0].degree(),
              [&](const auto& pw) { return G0.eval(pw) == 0 && G1.eval(pw) == 0 && G2.eval(pw) == 0; });
}

PullbackResult pullback_points(const std::array<HomogeneousPoly, 3>& g, const std::vector<ProjPoint>& targets) {
  const Field field = g[0].field();
  auto base = base_locus(g);
  if (!base.empty()) fail(ErrorKind::InvalidMap, "map has base point " + base.front().to_string());
  std::set<ProjPoint> target_set;
  for (const auto& q : targets) {
    if (q.field() != field) fail(ErrorKind::MalformedInput, "targets over a different field");
    target_set.insert(q);
  }
  const std::uint64_t p = field.characteristic();
  PrimeForm G0(g[0]), G1(g[1]), G2(g[2]);
  PullbackResult res;
  std::array<std::vector<std::uint64_t>, 3> pw;
  for (std::uint64_t n = 0; n < p * p + p + 1; ++n) {
    auto z = point_at(n, p);
    fill_powers(pw, z, g[0].degree(), p);
    ProjPoint image(Scalar(G0.eval(pw), p), Scalar(G1.eval(pw), p), Scalar(G2.eval(pw), p));
    if (target_set.count(image)) res.preimages.emplace_back(Scalar(z[0], p), Scalar(z[1], p), Scalar(z[2], p));
  }
  res.count = res.preimages.size();
  return res;
}

HomogeneousPoly nine_cusp_sextic(const Field& field) {
  HomogeneousPoly f(field, 6);
  f.set({6, 0, 0}, field.one());
  f.set({0, 6, 0}, field.one());
  f.set({0, 0, 6}, field.one());
  f.set({3, 3, 0}, field.from_int(-2));
  f.set({0, 3, 3}, field.from_int(-2));
  f.set({3, 0, 3}, field.from_int(-2));
  return f;
}

}  // namespace cuspsyz
