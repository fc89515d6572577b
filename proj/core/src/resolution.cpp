#include "cuspsyz/resolution.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cuspsyz/error.hpp"

namespace cuspsyz {

namespace {

std::string join(const std::vector<unsigned>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

Vector shift(const Vector& v, unsigned from_degree, int var, const Field& field) {
  Vector out(monomial_count(from_degree + 1), field.zero());
  const auto& mons = monomials(from_degree);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Exponent e = mons[i];
    ++e[var];
    out[monomial_index(e)] = v[i];
  }
  return out;
}

long long binom2(long long x) { return x < 0 ? 0 : (x + 1) * (x + 2) / 2; }

}  // namespace

std::string BettiData::to_string() const { return "a=(" + join(a) + ") b=(" + join(b) + ")"; }

std::size_t hilbert_function(const std::vector<ProjPoint>& points, unsigned degree) {
  return eval_matrix(points, degree).rank();
}

GradedPiece ideal_piece(const std::vector<ProjPoint>& points, unsigned degree) {
  GradedPiece g{degree, {}};
  Field field = points.at(0).field();
  for (const auto& v : eval_matrix(points, degree).kernel_basis())
    g.basis.push_back(HomogeneousPoly::from_coefficients(field, degree, v));
  return g;
}

Resolution resolve(const std::vector<ProjPoint>& points) {
  if (points.empty()) fail(ErrorKind::Precondition, "resolution of an empty point set");
  const Field field = points[0].field();
  const std::size_t N = points.size();
  Resolution res;
  std::vector<unsigned> gen_deg;
  std::vector<Vector> gen_coef;
  std::vector<Vector> prev_ideal, prev_syz;
  std::optional<unsigned> r0;
  std::vector<unsigned> syz_deg;

  for (unsigned d = 0;; ++d) {
    if (d > N + 2) fail(ErrorKind::Internal, "resolution did not stabilize by degree #points+2");
    const std::size_t dim = monomial_count(d);
    std::vector<Vector> kernel = eval_matrix(points, d).kernel_basis();
    DegreeStep step{};
    step.degree = d;
    step.hilbert = dim - kernel.size();
    step.ideal_dim = kernel.size();
    res.hilbert.push_back(step.hilbert);

    EchelonBasis span(field, dim);
    for (const auto& v : prev_ideal)
      for (int var = 0; var < 3; ++var) span.insert(shift(v, d - 1, var, field));
    step.ideal_from_below = span.size();
    for (const auto& v : kernel)
      if (span.insert(v)) {
        gen_deg.push_back(d);
        gen_coef.push_back(v);
        ++step.new_generators;
      }

    // Syzygies of degree d: kernel of (h_i) -> sum h_i g_i, h_i in S_{d-a_i}.
    std::vector<std::size_t> offset;
    std::size_t cols = 0;
    for (unsigned a : gen_deg) {
      offset.push_back(cols);
      cols += monomial_count(d - a);
    }
    std::vector<Vector> syz;
    if (cols > 0) {
      ExactMatrix M(field, dim, cols);
      for (std::size_t i = 0; i < gen_deg.size(); ++i) {
        const auto& gm = monomials(gen_deg[i]);
        const auto& mm = monomials(d - gen_deg[i]);
        for (std::size_t c = 0; c < mm.size(); ++c)
          for (std::size_t e = 0; e < gm.size(); ++e) {
            if (gen_coef[i][e].is_zero()) continue;
            Exponent x{gm[e][0] + mm[c][0], gm[e][1] + mm[c][1], gm[e][2] + mm[c][2]};
            M.at(monomial_index(x), offset[i] + c) = gen_coef[i][e];
          }
      }
      syz = M.kernel_basis();
    }
    EchelonBasis syz_span(field, cols);
    for (const auto& v : prev_syz) {
      for (int var = 0; var < 3; ++var) {
        Vector w(cols, field.zero());
        std::size_t prev_off = 0;
        for (std::size_t i = 0; i < gen_deg.size() && gen_deg[i] < d; ++i) {
          const auto& mm = monomials(d - 1 - gen_deg[i]);
          for (std::size_t c = 0; c < mm.size(); ++c) {
            const Scalar& x = v[prev_off + c];
            if (x.is_zero()) continue;
            Exponent e = mm[c];
            ++e[var];
            w[offset[i] + monomial_index(e)] = x;
          }
          prev_off += mm.size();
        }
        syz_span.insert(w);
      }
    }
    step.syzygy_dim = syz.size();
    step.syzygy_from_below = syz_span.size();
    if (step.syzygy_from_below > step.syzygy_dim) fail(ErrorKind::Internal, "syzygy span exceeds syzygy space");
    step.new_syzygies = step.syzygy_dim - step.syzygy_from_below;
    for (std::size_t i = 0; i < step.new_syzygies; ++i) syz_deg.push_back(d);
    res.steps.push_back(step);

    prev_ideal = std::move(kernel);
    prev_syz = std::move(syz);
    if (!r0 && step.hilbert == N) r0 = d;
    if (r0 && d >= *r0 + 2) break;
  }

  for (std::size_t i = 0; i < gen_deg.size(); ++i)
    res.generators.push_back(HomogeneousPoly::from_coefficients(field, gen_deg[i], gen_coef[i]));
  res.betti.a = gen_deg;
  res.betti.b = syz_deg;
  std::sort(res.betti.a.rbegin(), res.betti.a.rend());
  std::sort(res.betti.b.rbegin(), res.betti.b.rend());
  res.betti.point_count = N;
  auto bad = betti_violations(res.betti);
  if (!bad.empty()) fail(ErrorKind::Internal, "inconsistent resolution " + res.betti.to_string() + ": " + bad.front());
  return res;
}

BettiData minimal_resolution(const std::vector<ProjPoint>& points) { return resolve(points).betti; }

std::vector<std::string> betti_violations(const BettiData& betti) {
  std::vector<std::string> bad;
  const auto& a = betti.a;
  const auto& b = betti.b;
  if (a.size() != b.size() + 1) bad.push_back("expected t+1 generators for t syzygies");
  if (!std::is_sorted(a.rbegin(), a.rend()) || !std::is_sorted(b.rbegin(), b.rend()))
    bad.push_back("degree lists not descending");
  for (std::size_t i = 0; i < b.size() && i < a.size(); ++i)
    if (a[i] >= b[i]) bad.push_back("a_" + std::to_string(i + 1) + " >= b_" + std::to_string(i + 1));
  long long sa = std::accumulate(a.begin(), a.end(), 0LL), sb = std::accumulate(b.begin(), b.end(), 0LL);
  if (sa != sb) bad.push_back("sum a != sum b");
  long long qa = 0, qb = 0;
  for (unsigned x : a) qa += static_cast<long long>(x) * x;
  for (unsigned x : b) qb += static_cast<long long>(x) * x;
  if (qb - qa != 2 * static_cast<long long>(betti.point_count))
    bad.push_back("(sum b^2 - sum a^2)/2 != #points");
  return bad;
}

long long hilbert_from_betti(const BettiData& betti, int degree) {
  long long h = binom2(degree);
  for (unsigned a : betti.a) h -= binom2(degree - static_cast<int>(a));
  for (unsigned b : betti.b) h += binom2(degree - static_cast<int>(b));
  return h;
}

ScaledTrial scaled_trial(const std::vector<ProjPoint>& points, const std::array<HomogeneousPoly, 3>& map,
                         const BettiData& expected) {
  ScaledTrial t;
  if (!base_locus(map).empty()) {
    t.outcome = "base-point";
    return t;
  }
  PullbackResult pb = pullback_points(map, points);
  t.preimages = pb.count;
  std::size_t w = map[0].degree();
  if (pb.count != w * w * points.size()) {
    t.outcome = "non-generic";
    return t;
  }
  t.betti = minimal_resolution(pb.preimages);
  t.outcome = *t.betti == expected ? "success" : "mismatch";
  return t;
}

namespace {

using Mat3 = std::array<std::array<Scalar, 3>, 3>;

Scalar det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 inverse3(const Mat3& m) {
  Scalar d = det3(m);
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int a = (j + 1) % 3, b = (j + 2) % 3, c = (i + 1) % 3, e = (i + 2) % 3;
      r[i][j] = (m[a][c] * m[b][e] - m[a][e] * m[b][c]) / d;
    }
  return r;
}

Mat3 mul3(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r[i][j] = x[i][0] * y[0][j];
      for (int k = 1; k < 3; ++k) r[i][j] += x[i][k] * y[k][j];
    }
  return r;
}

Mat3 random_invertible(const Field& f, Rng& rng) {
  for (;;) {
    Mat3 m;
    for (auto& row : m)
      for (auto& x : row) x = f.random(rng);
    if (!det3(m).is_zero()) return m;
  }
}

Scalar random_nonzero(const Field& f, Rng& rng) {
  for (;;) {
    Scalar s = f.random(rng);
    if (!s.is_zero()) return s;
  }
}

std::array<HomogeneousPoly, 3> power_composite(const Field& field, unsigned w, const Mat3& L1, const Mat3& L2) {
  std::array<HomogeneousPoly, 3> powers{HomogeneousPoly(field, w), HomogeneousPoly(field, w),
                                        HomogeneousPoly(field, w)};
  for (int j = 0; j < 3; ++j) {
    HomogeneousPoly lin(field, 1);
    for (int m = 0; m < 3; ++m) {
      Exponent e{0, 0, 0};
      e[m] = 1;
      lin.set(e, L1[j][m]);
    }
    powers[j] = lin.pow(w);
  }
  std::array<HomogeneousPoly, 3> g{HomogeneousPoly(field, w), HomogeneousPoly(field, w), HomogeneousPoly(field, w)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i] = g[i] + powers[j] * L2[i][j];
  return g;
}

}  // namespace

ScaledReport scaled_resolution_check(const std::vector<ProjPoint>& points, unsigned w, unsigned trials,
                                     std::uint64_t seed, MapFamily family) {
  if (w == 0) fail(ErrorKind::Precondition, "map degree must be positive");
  if (points.empty()) fail(ErrorKind::Precondition, "empty point set");
  const Field field = points[0].field();
  if (!field.is_prime_field()) fail(ErrorKind::Precondition, "scaled check runs over F_p");
  ScaledReport rep;
  rep.w = w;
  rep.original = minimal_resolution(points);
  rep.expected = rep.original;
  for (auto& a : rep.expected.a) a *= w;
  for (auto& b : rep.expected.b) b *= w;
  rep.expected.point_count = rep.original.point_count * w * w;

  // Three non-collinear targets, if any, are steered onto w-th power points.
  std::optional<Mat3> Q;
  for (std::size_t i = 0; i < points.size() && !Q; ++i)
    for (std::size_t j = i + 1; j < points.size() && !Q; ++j)
      for (std::size_t k = j + 1; k < points.size() && !Q; ++k) {
        Mat3 m;
        for (int r = 0; r < 3; ++r) m[r] = {points[i][r], points[j][r], points[k][r]};
        if (!det3(m).is_zero()) Q = m;
      }

  Rng rng(seed);
  for (unsigned n = 0; n < trials; ++n) {
    std::array<HomogeneousPoly, 3> g{HomogeneousPoly(field, w), HomogeneousPoly(field, w), HomogeneousPoly(field, w)};
    if (family == MapFamily::Generic) {
      for (auto& gi : g) gi = HomogeneousPoly::random(field, w, rng);
    } else {
      Mat3 L1 = random_invertible(field, rng);
      Mat3 L2;
      if (Q) {
        Mat3 S;
        do {
          for (int c = 0; c < 3; ++c)
            for (int r = 0; r < 3; ++r) S[r][c] = random_nonzero(field, rng).pow(w);
        } while (det3(S).is_zero());
        Mat3 D;
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) D[r][c] = r == c ? random_nonzero(field, rng) : field.zero();
        L2 = mul3(mul3(*Q, D), inverse3(S));
      } else {
        L2 = random_invertible(field, rng);
      }
      g = power_composite(field, w, L1, L2);
    }
    ScaledTrial t = scaled_trial(points, g, rep.expected);
    if (t.outcome == "success") ++rep.successes;
    if (t.outcome == "mismatch") ++rep.mismatches;
    rep.trials.push_back(std::move(t));
  }
  rep.verdict = rep.mismatches ? "mismatch" : (rep.successes ? "success" : "inconclusive");
  return rep;
}

}  // namespace cuspsyz
