#include <benchmark/benchmark.h>

#include "coherent/coherent.hpp"

using namespace coherent;

namespace {

PhaseSpace space_for(int index) {
  switch (index) {
    case 0: return PhaseSpace::plane(1.0);
    case 1: return PhaseSpace::disc(3.0);
    default: return PhaseSpace::sphere(6.0);
  }
}

void BM_BuildGrid(benchmark::State& state) {
  const PhaseSpace s = space_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_grid(s, 2.0, kDefaultRadialOrder, 52));
}
BENCHMARK(BM_BuildGrid)->DenseRange(0, 2);

void BM_LpFunctional(benchmark::State& state) {
  const PhaseSpace s = space_for(static_cast<int>(state.range(0)));
  const double p = state.range(1) / 2.0;
  const auto f = random_state(s, 10, 1);
  const auto grid = lp_grid(s, p, f.degree());
  for (auto _ : state) benchmark::DoNotOptimize(lp_functional(f, p, grid));
}
BENCHMARK(BM_LpFunctional)->ArgsProduct({{0, 1, 2}, {8, 7}});

void BM_ObjectiveGradient(benchmark::State& state) {
  const LpObjective obj(PhaseSpace::plane(1.0), 4.0, static_cast<int>(state.range(0)));
  const auto x = orthonormal_coordinates(random_state(obj.space(), obj.max_degree(), 2));
  for (auto _ : state) benchmark::DoNotOptimize(obj.gradient(x));
}
BENCHMARK(BM_ObjectiveGradient)->Arg(6)->Arg(12)->Arg(24);

void BM_Ascend(benchmark::State& state) {
  const LpObjective obj(PhaseSpace::disc(3.0), 4.0, 12);
  const auto start = orthonormal_coordinates(random_state(obj.space(), 12, 3));
  OptimizerOptions o;
  o.max_iterations = 50;
  for (auto _ : state) {
    auto x = start;
    benchmark::DoNotOptimize(ascend(obj, x, o));
  }
}
BENCHMARK(BM_Ascend);

void BM_DisplacementMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(displacement_matrix(n, n, {1.3, -0.7}));
}
BENCHMARK(BM_DisplacementMatrix)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
