#include <algorithm>

#include "cuspsyz/construct.hpp"
#include "cuspsyz/error.hpp"
#include "cuspsyz/geometry.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cuspsyz;
using test::pt;
using test::var;

TEST_CASE("projective plane over F_7 has 57 points in canonical order") {
  auto pts = all_points(Field::prime(7));
  CHECK(pts.size() == 57);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
}

TEST_CASE("monomial indexing is deglex") {
  for (unsigned d = 0; d <= 8; ++d) {
    const auto& ms = monomials(d);
    CHECK(ms.size() == monomial_count(d));
    for (std::size_t i = 0; i < ms.size(); ++i) CHECK(monomial_index(ms[i]) == i);
    CHECK(std::is_sorted(ms.begin(), ms.end(), DeglexGreater{}));
  }
}

TEST_CASE("evaluation matrix ranks") {
  Field f = Field::prime(101);
  CHECK(eval_matrix({pt(f, 0, 0, 1)}, 0).rank() == 1);
  CHECK(eval_matrix({pt(f, 1, 0, 0), pt(f, 0, 1, 0), pt(f, 0, 0, 1)}, 1).rank() == 3);
  Field q = Field::rationals();
  std::vector<ProjPoint> conic{pt(q, 1, 0, 1), pt(q, 0, 1, 1), pt(q, -1, 0, 1),
                               pt(q, 3, 4, 5), pt(q, 5, 12, 13), pt(q, 8, 15, 17)};
  CHECK(eval_matrix(conic, 2).rank() == 5);
  CHECK_THROWS_AS(eval_matrix({pt(f, 1, 2, 3), pt(f, 2, 4, 6)}, 1), Error);
}

TEST_CASE("singularity classification") {
  Field f = Field::prime(7);
  auto x = var(f, 0), y = var(f, 1), z = var(f, 2);
  CHECK(classify_singularity(z * y * y - x * x * x, pt(f, 0, 0, 1)).kind == SingularityKind::Cusp);
  CHECK(classify_singularity(x * y * (x + y + z), pt(f, 0, 0, 1)).kind == SingularityKind::Node);
  CHECK(classify_singularity(x * x + y * y - z * z, pt(f, 1, 0, 1)).kind == SingularityKind::Smooth);
  CHECK(classify_singularity(x * y * (x - y), pt(f, 0, 0, 1)).kind == SingularityKind::Other);
  CHECK(classify_singularity(z * z * y * y - x.pow(4), pt(f, 0, 0, 1)).kind == SingularityKind::Other);
  CHECK_THROWS_AS(classify_singularity(x * x + y * y - z * z, pt(f, 1, 1, 1)), Error);
  auto cusp = classify_singularity(z * y * y - x * x * x, pt(f, 0, 0, 1));
  REQUIRE(cusp.tangent);
  CHECK((*cusp.tangent)[0].is_zero());
  CHECK((*cusp.tangent)[1].is_one());
  CHECK((*cusp.tangent)[2].is_zero());
}

TEST_CASE("singular points by exhaustive scan") {
  Field f = Field::prime(7);
  auto x = var(f, 0), y = var(f, 1), z = var(f, 2);
  CHECK(singular_points(x * x + y * y - z * z).points.empty());
  auto cubic = singular_points(z * y * y - x * x * x);
  REQUIRE(cubic.points.size() == 1);
  CHECK(cubic.points[0] == pt(f, 0, 0, 1));
  CHECK(cubic.scanned == 57);
  SingularPointsOptions threaded;
  threaded.threads = 3;
  HomogeneousPoly sextic = nine_cusp_sextic(Field::prime(13));
  auto a = singular_points(sextic);
  auto b = singular_points(sextic, threaded);
  CHECK(a.points == b.points);
  CHECK(a.points.size() == 9);
  for (const auto& p : a.points) CHECK(classify_singularity(sextic, p).kind == SingularityKind::Cusp);
  SingularPointsOptions tiny;
  tiny.point_budget = 10;
  CHECK_THROWS_AS(singular_points(sextic, tiny), Error);
}

TEST_CASE("nine-cusp sextic only splits with cube roots of unity") {
  // p = 2 mod 3: the cusps are not all rational.
  auto pts = singular_points(nine_cusp_sextic(Field::prime(17))).points;
  CHECK(pts.size() < 9);
}

TEST_CASE("squarefree test") {
  Field f = Field::prime(31);
  auto x = var(f, 0), y = var(f, 1), z = var(f, 2);
  Rng rng(1);
  CHECK(is_squarefree(x.pow(6) + y.pow(6) + z.pow(6), rng));
  CHECK_FALSE(is_squarefree((x + y).pow(2) * (x.pow(4) + z.pow(4)), rng));
  CHECK_FALSE(is_squarefree((x * x + y * z).pow(3), rng));
}

TEST_CASE("pullback and base locus") {
  Field f = Field::prime(101);
  auto x = var(f, 0), y = var(f, 1), z = var(f, 2);
  std::array<HomogeneousPoly, 3> lin{y, z, x};
  auto pb = pullback_points(lin, {pt(f, 1, 2, 3)});
  REQUIRE(pb.preimages.size() == 1);
  CHECK(pb.preimages[0] == pt(f, 3, 1, 2));
  std::array<HomogeneousPoly, 3> squares{x * x, y * y, z * z};
  auto sq = pullback_points(squares, {pt(f, 1, 4, 9)});
  CHECK(sq.preimages.size() == 4);
  // Enumeration oracle for the preimage count.
  std::size_t count = 0;
  for (const auto& p : all_points(f))
    if (ProjPoint(squares[0].evaluate(p), squares[1].evaluate(p), squares[2].evaluate(p)) == pt(f, 1, 4, 9)) ++count;
  CHECK(count == 4);
  std::array<HomogeneousPoly, 3> based{x * y, x * z, y * z};
  CHECK(base_locus(based).size() == 3);
  CHECK_THROWS_AS(pullback_points(based, {pt(f, 1, 1, 1)}), Error);
}

TEST_CASE("construction of cuspidal sextics") {
  for (std::uint64_t seed : {1, 2, 7}) {
    CuspidalCurve c = construct_cuspidal(1, 31, seed);
    CHECK(c.cusps.size() == 6);
    CHECK(c.curve.degree() == 6);
    HomogeneousPoly f = c.curve.product();
    CHECK(f == c.f1.pow(3) + c.f2.pow(2));
    auto sing = singular_points(f).points;
    CHECK(sing == c.cusps);
    for (const auto& p : sing) CHECK(classify_singularity(f, p).kind == SingularityKind::Cusp);
    // Same (k, p, seed), same curve.
    CHECK(construct_cuspidal(1, 31, seed).f2 == c.f2);
  }
  CHECK_THROWS_AS(construct_cuspidal(1, 5, 1), Error);
  CHECK_THROWS_AS(construct_cuspidal(2, 11, 1), Error);
}

TEST_CASE("assembly rejects tangency and repeated components") {
  Field f = Field::prime(31);
  auto x = var(f, 0), y = var(f, 1), z = var(f, 2);
  Rng rng(4);
  HomogeneousPoly conic = x * z - y * y;
  // x = 0 is tangent to the conic at (0:0:1).
  HomogeneousPoly tangent_cubic = x * (x + y - z * f.from_int(2)) * (x + y * f.from_int(2) - z * f.from_int(5));
  auto r = assemble_cuspidal(conic, tangent_cubic, 1, rng);
  CHECK_FALSE(r.ok);
  CHECK(r.category == "non-transversal");
  auto shared = assemble_cuspidal(conic, conic * x, 6, rng);
  CHECK_FALSE(shared.ok);
  CHECK(shared.category == "shared component");
  auto good = assemble_cuspidal(conic, (x - z) * (x - z * f.from_int(4)) * (x - z * f.from_int(9)), 6, rng);
  CHECK(good.ok);
  CHECK(good.cusps.size() == 6);
}
