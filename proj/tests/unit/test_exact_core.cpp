#include <algorithm>
#include <numeric>

#include "cuspsyz/error.hpp"
#include "cuspsyz/matrix.hpp"
#include "cuspsyz/rng.hpp"
#include "cuspsyz/surd.hpp"
#include "doctest.h"

using namespace cuspsyz;

namespace {

// Determinant by permutation expansion; independent of elimination.
Scalar leibniz_det(const Field& f, const std::vector<Vector>& m) {
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = f.zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term = f.one();
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m[i][perm[i]];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Largest size of a nonzero minor.
std::size_t minor_rank(const Field& f, const std::vector<Vector>& rows, std::size_t cols) {
  std::size_t best = 0;
  const std::size_t R = rows.size();
  for (unsigned rmask = 1; rmask < (1u << R); ++rmask) {
    for (unsigned cmask = 1; cmask < (1u << cols); ++cmask) {
      if (__builtin_popcount(rmask) != __builtin_popcount(cmask)) continue;
      std::vector<Vector> sub;
      for (std::size_t r = 0; r < R; ++r) {
        if (!(rmask >> r & 1)) continue;
        Vector row;
        for (std::size_t c = 0; c < cols; ++c)
          if (cmask >> c & 1) row.push_back(rows[r][c]);
        sub.push_back(row);
      }
      if (!leibniz_det(f, sub).is_zero()) best = std::max<std::size_t>(best, sub.size());
    }
  }
  return best;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(101);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Scalar a = f.random(rng);
    if (a.is_zero()) continue;
    CHECK((a * a.inverse()).is_one());
    CHECK(a.pow(100).is_one());
  }
  CHECK(f.from_int(-1).residue() == 100);
  CHECK(f.from_rational(Rational(1, 2)) * f.from_int(2) == f.one());
  CHECK_THROWS_AS(f.zero().inverse(), Error);
  CHECK_THROWS_AS(Field::prime(91), Error);
}

TEST_CASE("mixing fields is rejected") {
  Scalar a = Field::prime(7).one();
  Scalar b = Field::prime(11).one();
  Scalar q = Field::rationals().one();
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(a * q, Error);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-17/2") == Rational(-17, 2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(floor_of(Rational(-7, 2)) == -4);
  CHECK(ceil_of(Rational(-7, 2)) == -3);
}

TEST_CASE("kernel basis examples") {
  Field q = Field::rationals();
  ExactMatrix id = ExactMatrix::from_rows({{q.one(), q.zero()}, {q.zero(), q.one()}});
  CHECK(id.kernel_basis().empty());
  ExactMatrix row = ExactMatrix::from_rows({{q.one(), q.one()}});
  auto ker = row.kernel_basis();
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == -ker[0][1]);
  CHECK(!ker[0][0].is_zero());
}

TEST_CASE("rank agrees with the minor oracle over F_7") {
  Field f = Field::prime(7);
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vector> rows(3, Vector(5));
    for (auto& r : rows)
      for (auto& x : r) x = rng.uniform(3) ? f.random(rng) : f.zero();
    ExactMatrix m = ExactMatrix::from_rows(rows);
    std::size_t rank = m.rank();
    CHECK(rank == minor_rank(f, rows, 5));
    auto ker = m.kernel_basis();
    CHECK(ker.size() == 5 - rank);
    for (const auto& v : ker)
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    CHECK(ExactMatrix::from_rows(ker.empty() ? std::vector<Vector>{Vector(5, f.zero())} : ker).rank() ==
          (ker.empty() ? 0 : ker.size()));
  }
}

TEST_CASE("rref is reduced and idempotent") {
  Field q = Field::rationals();
  Rng rng(5);
  std::vector<Vector> rows(4, Vector(6));
  for (auto& r : rows)
    for (auto& x : r) x = q.random(rng, 5);
  rows[3] = Vector(6);
  for (int c = 0; c < 6; ++c) rows[3][c] = rows[0][c] + rows[1][c];
  ExactMatrix m = ExactMatrix::from_rows(rows);
  std::vector<std::size_t> pivots;
  ExactMatrix r = m.rref(&pivots);
  CHECK(pivots.size() == m.rank());
  CHECK(m.rank() == 3);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    CHECK(r.at(i, pivots[i]).is_one());
    for (std::size_t j = 0; j < r.rows(); ++j)
      if (j != i) CHECK(r.at(j, pivots[i]).is_zero());
  }
  std::vector<std::size_t> again;
  ExactMatrix rr = r.rref(&again);
  CHECK(again == pivots);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) CHECK(rr.at(i, j) == r.at(i, j));
}

TEST_CASE("echelon basis tracks span dimension") {
  for (std::uint64_t p : {0ull, 13ull}) {
    Field f = p ? Field::prime(p) : Field::rationals();
    Rng rng(p + 1);
    EchelonBasis basis(f, 5);
    std::vector<Vector> rows;
    for (int i = 0; i < 12; ++i) {
      Vector v(5);
      for (auto& x : v) x = rng.uniform(2) ? f.random(rng) : f.zero();
      if (i % 3 == 2) {
        for (int c = 0; c < 5; ++c) v[c] = rows.empty() ? f.zero() : rows.back()[c] * f.from_int(2);
      }
      bool before = basis.contains(v);
      bool grew = basis.insert(v);
      CHECK(grew == !before);
      rows.push_back(v);
      CHECK(basis.size() == ExactMatrix::from_rows(rows).rank());
    }
  }
}

TEST_CASE("surd signs and floors") {
  CHECK(surd73(0, 0).sign() == 0);
  CHECK(surd73(Rational(-17, 2), 1).sign() == 1);
  CHECK(surd73(9, -1).sign() == 1);
  CHECK(surd73(8, -1).sign() == -1);
  CHECK(surd73(5, 0).floor() == 5);
  CHECK(surd73(0, 1).floor() == 8);
  CHECK(surd73(0, -1).floor() == -9);
  CHECK(surd73(0, -1).ceil() == -8);
  Rng rng(9);
  for (int i = 0; i < 500; ++i) {
    Rational u(static_cast<long>(rng.uniform(2001)) - 1000, 1 + static_cast<long>(rng.uniform(50)));
    Rational v(static_cast<long>(rng.uniform(201)) - 100, 1 + static_cast<long>(rng.uniform(50)));
    Surd73 s = surd73(u, v);
    Integer fl = s.floor();
    CHECK((s - Rational(fl)).sign() >= 0);
    CHECK((s - Rational(fl + 1)).sign() < 0);
  }
}

TEST_CASE("surd arithmetic") {
  Surd73 a = surd73(1, 1), b = surd73(2, -3);
  Surd73 prod = a * b;
  CHECK(prod.u() == 2 - 3 * 73);
  CHECK(prod.v() == -1);
  CHECK((a + b).u() == 3);
  CHECK(a.compare(b) > 0);
  CHECK_THROWS_AS(a + QuadraticSurd(0, 1, 5), Error);
}

TEST_CASE("nested radical floors") {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    Surd73 P = surd73(static_cast<long>(rng.uniform(4001)) - 2000, static_cast<long>(rng.uniform(201)) - 100);
    Surd73 alpha = surd73(static_cast<long>(rng.uniform(100000)), static_cast<long>(rng.uniform(2001)) - 1000);
    if (alpha.sign() < 0) continue;
    Rational scale(1, 1 + static_cast<long>(rng.uniform(20)));
    Integer m = floor_minus_sqrt(P, alpha, scale);
    // m <= (P - sqrt alpha) scale < m+1, i.e. P - m/scale >= sqrt alpha > P - (m+1)/scale
    Surd73 lo = P - Rational(m) / scale, hi = P - Rational(m + 1) / scale;
    CHECK(lo.sign() >= 0);
    CHECK((lo * lo - alpha).sign() >= 0);
    CHECK((hi.sign() < 0 || (hi * hi - alpha).sign() < 0));
    Integer s = sqrt_bracket(alpha, 3);
    Surd73 scaled = alpha * Rational(1000000);
    CHECK((scaled - Rational(s * s)).sign() >= 0);
    CHECK((scaled - Rational((s + 1) * (s + 1))).sign() < 0);
  }
}

TEST_CASE("rng streams are reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform(97) == b.uniform(97));
  Rng c(42);
  CHECK(c.next() == std::mt19937_64(42)());
}
