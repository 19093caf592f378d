#include <benchmark/benchmark.h>

#include <random>

#include "tropcount/io.hpp"

using namespace tropcount;

namespace {

IntMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> entry(-50, 50);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

Degree plane_degree(int d) {
  std::vector<End> ends;
  for (int i = 0; i < d; ++i)
    for (const auto& u : {LatticeVec{-1, 0}, LatticeVec{0, -1}, LatticeVec{1, 1}}) ends.push_back(End{u, 1});
  return Degree(ends);
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
  IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(6)->Arg(10);

static void BM_HermiteNormalForm(benchmark::State& state) {
  IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(3)->Arg(6)->Arg(10);

static void BM_UnmarkedTypes(benchmark::State& state) {
  Degree d = plane_degree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(unmarked_types(d));
}
BENCHMARK(BM_UnmarkedTypes)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_CountPlane(benchmark::State& state) {
  Problem p = plane_problem(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_invariant(p));
}
BENCHMARK(BM_CountPlane)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_CountFlag3(benchmark::State& state) {
  Problem p = preset_flag3_problem(state.range(0), state.range(1));
  p.options.long_run = true;
  for (auto _ : state) benchmark::DoNotOptimize(count_invariant(p));
}
BENCHMARK(BM_CountFlag3)->Args({1, 1})->Args({1, 2})->Args({2, 1})->Unit(benchmark::kMillisecond);

static void BM_CountOctahedron(benchmark::State& state) {
  Problem p = preset_octahedron_problem(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_invariant(p));
}
BENCHMARK(BM_CountOctahedron)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_NormalFan(benchmark::State& state) {
  Polytope p = state.range(0) == 0 ? builtin_octahedron(Rational(1)) : builtin_gc3(Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(normal_fan(p));
}
BENCHMARK(BM_NormalFan)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
