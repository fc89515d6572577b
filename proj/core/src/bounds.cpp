#include "cuspsyz/bounds.hpp"

#include "cuspsyz/error.hpp"

namespace cuspsyz {

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

SurdBound surd_bound(const Rational& u, const Rational& v, const Integer& R) {
  if (R < 0) return {false, QuadraticSurd(), 0};
  QuadraticSurd s(u, v, R);
  return {true, s, s.ceil()};
}

Integer radicand(unsigned k, unsigned r) {
  Integer K = k, Rr = r;
  return -Rr * Rr + 4 * K * Rr + 1 - 4 * K + 4 * K * K;
}

}  // namespace

Surd73 langer_bound(unsigned d) {
  Rational D = d;
  return surd73(q(125, 432), q(1, 432)) * (D * D) - surd73(q(511, 1752), q(11, 1752)) * D;
}

long long langer_floor(unsigned d) {
  Integer f = langer_bound(d).floor();
  return f < 0 ? 0 : f.get_si();
}

long long m_bound(unsigned d, MPolicy policy) {
  switch (policy) {
    case MPolicy::Default:
      return d == 6 ? 9 : langer_floor(d);
    case MPolicy::Langer:
      return langer_floor(d);
    case MPolicy::Miyaoka: {
      long long D = d;
      long long v = 5 * D * D - 6 * D;
      return v < 0 ? 0 : v / 16;
    }
  }
  return 0;
}

long long m_of(unsigned d, MPolicy policy) {
  if (d == 0) fail(ErrorKind::Precondition, "degree must be positive");
  long long num = 2 * m_bound(d, policy);
  return (num + d - 1) / d;
}

SurdBound min_cusps_formula(unsigned k, unsigned r) {
  if (k == 0 || r == 0) fail(ErrorKind::Precondition, "k and r must be positive");
  Rational f = q(3 * static_cast<long long>(k), 2);
  return surd_bound(f * Rational(static_cast<long>(r) - 1 + 2 * static_cast<long>(k)), f, radicand(k, r));
}

SurdBound d0_min(unsigned k, unsigned r) {
  if (k == 0 || r == 0) fail(ErrorKind::Precondition, "k and r must be positive");
  return surd_bound(q(2 * static_cast<long long>(k) - 1 + r, 2), q(1, 2), radicand(k, r));
}

Rational min_cusps_shape2(unsigned k, unsigned r) {
  long long K = k, R = r;
  return q(1 - 10 * K + 10 * R * K + 25 * K * K - R * R, 4);
}

Rational min_cusps_shape3(unsigned k, unsigned r) {
  long long K = k, R = r;
  return q(25 * K * K + 10 * R * K - 10 * K - R * R + 1, 4);
}

Rational min_cusps_expansion(unsigned k, unsigned r) {
  long K = k, R = r;
  return Rational(6 * K * K + 3 * (R - 1) * K) + q(3 * R * (1 - R), 4);
}

Rational min_cusps_expansion_constant(unsigned r) {
  long long R = r;
  return q(3 * R * (R - 1) * (R - 1), 8);
}

GBound g_bound(unsigned k) {
  if (k == 0) fail(ErrorKind::Precondition, "k must be positive");
  Rational K = k;
  GBound g;
  g.k = k;
  g.linear = surd73(-219, -33) + surd73(9125, 73) * K;
  g.alpha = surd73(3325734, -14454) + surd73(-11766432, 287328) * K + surd73(12267358, -564874) * (K * K);
  g.half_rank_floor = floor_minus_sqrt(g.linear, g.alpha, q(1, 2628));
  g.rank_floor = floor_minus_sqrt(g.linear, g.alpha, q(1, 1314));
  Integer h = floor_minus_sqrt(g.linear, g.alpha, q(1000, 2628));
  Integer r = floor_minus_sqrt(g.linear, g.alpha, q(1000, 1314));
  g.half_lo = Rational(h, 1000);
  g.half_hi = Rational(h + 1, 1000);
  g.rank_lo = Rational(r, 1000);
  g.rank_hi = Rational(r + 1, 1000);
  g.half_lo.canonicalize();
  g.half_hi.canonicalize();
  g.rank_lo.canonicalize();
  g.rank_hi.canonicalize();
  return g;
}

std::pair<Rational, Rational> g_slope_bracket(unsigned digits) {
  Integer scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Integer n = floor_minus_sqrt(surd73(125, 1), surd73(2302, -106), Rational(scale, 36));
  Rational lo(n, scale), hi(n + 1, scale);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

std::vector<std::pair<unsigned, unsigned>> lemexcl_scan(unsigned k_max, MPolicy policy) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned k = 1; k <= k_max; ++k) {
    long long K = k, cap = m_bound(6 * k, policy);
    for (unsigned r = 1; r <= 5 * k - 1; ++r) {
      long long R = r;
      long long c = 5 * R * K - R * (R + 1) / 2;
      if (c <= 3 * K * R && c <= cap) out.emplace_back(k, r);
    }
  }
  return out;
}

}  // namespace cuspsyz
