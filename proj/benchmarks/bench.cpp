#include <benchmark/benchmark.h>

#include "cuspsyz/construct.hpp"
#include "cuspsyz/matrix.hpp"
#include "cuspsyz/resolution.hpp"
#include "cuspsyz/sequences.hpp"

using namespace cuspsyz;

namespace {

std::vector<ProjPoint> random_points(const Field& f, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  auto all = all_points(f);
  rng.shuffle(all);
  all.erase(all.begin() + static_cast<std::ptrdiff_t>(n), all.end());
  return all;
}

void BM_Resolution(benchmark::State& state) {
  auto pts = random_points(Field::prime(101), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_resolution(pts));
}
BENCHMARK(BM_Resolution)->Arg(9)->Arg(25)->Arg(60);

void BM_ResolutionK2Cusps(benchmark::State& state) {
  CuspidalCurve c = construct_cuspidal(2, 101, 1);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_resolution(c.cusps));
}
BENCHMARK(BM_ResolutionK2Cusps);

void BM_SingularPoints(benchmark::State& state) {
  Field f = Field::prime(static_cast<std::uint64_t>(state.range(0)));
  HomogeneousPoly sextic = nine_cusp_sextic(f);
  SingularPointsOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(singular_points(sextic, opts));
}
BENCHMARK(BM_SingularPoints)->Args({101, 1})->Args({1009, 1})->Args({1009, 4});

void BM_Enumeration(benchmark::State& state) {
  EnumerateOptions opts;
  unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sequences(k, 1, m_bound(6 * k), opts));
}
BENCHMARK(BM_Enumeration)->Arg(1)->Arg(2)->Arg(3);

void BM_Kernel(benchmark::State& state) {
  Field f = state.range(1) ? Field::prime(32003) : Field::rationals();
  auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(5);
  std::vector<Vector> rows(n, Vector(n + 5));
  for (auto& r : rows)
    for (auto& x : r) x = f.random(rng);
  ExactMatrix m = ExactMatrix::from_rows(rows);
  for (auto _ : state) benchmark::DoNotOptimize(m.kernel_basis());
}
BENCHMARK(BM_Kernel)->Args({20, 1})->Args({80, 1})->Args({20, 0});

}  // namespace

BENCHMARK_MAIN();
