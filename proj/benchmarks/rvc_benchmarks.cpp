#include <benchmark/benchmark.h>

#include "rvc/construction.hpp"
#include "rvc/decomposition.hpp"
#include "rvc/generators.hpp"
#include "rvc/oracle.hpp"
#include "rvc/verification.hpp"

namespace {

using namespace rvc;

void BM_VerifyCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = make_cycle(n);
  const Coloring c = cycle_coloring(n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_rainbow_vc(g, c, RainbowMode::rainbow()).verified());
}
BENCHMARK(BM_VerifyCycle)->Arg(20)->Arg(40)->Arg(60);

void BM_VerifyTwoConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_2connected(n, n / 4, 11);
  const Coloring c = two_connected_coloring(g);
  for (auto _ : state) benchmark::DoNotOptimize(verify_rainbow_vc(g, c, RainbowMode::rainbow()).verified());
}
BENCHMARK(BM_VerifyTwoConnected)->Arg(20)->Arg(40);

void BM_ExactCycle(benchmark::State& state) {
  const Graph g = make_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_rvc(g, RainbowMode::rainbow()).value);
}
BENCHMARK(BM_ExactCycle)->DenseRange(7, 11)->Unit(benchmark::kMillisecond);

void BM_ExactRandom(benchmark::State& state) {
  const Graph g = random_2connected(10, 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(exact_rvc(g, RainbowMode::revised()).value);
}
BENCHMARK(BM_ExactRandom)->Unit(benchmark::kMillisecond);

void BM_EarDecomposition(benchmark::State& state) {
  const Graph g = random_2connected(static_cast<int>(state.range(0)), 8, 5, GeneratorKind::ear_built);
  for (auto _ : state) benchmark::DoNotOptimize(ear_decomposition(g).long_count);
}
BENCHMARK(BM_EarDecomposition)->Arg(20)->Arg(40);

void BM_TwoConnectedColoring(benchmark::State& state) {
  const Graph g = random_2connected(static_cast<int>(state.range(0)), 6, 17);
  for (auto _ : state) benchmark::DoNotOptimize(two_connected_coloring(g).reported_count);
}
BENCHMARK(BM_TwoConnectedColoring)->Arg(16)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
