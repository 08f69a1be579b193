#include <benchmark/benchmark.h>

#include <random>

#include "latknot/latknot.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace latknot;
using namespace latknot::testing;

namespace {

KnotWord knot_of_length(std::size_t n) {
  std::mt19937_64 rng(n);
  return random_knot(rng, n);
}

void BM_ValidateKnot(benchmark::State& state) {
  const Word w = knot_of_length(static_cast<std::size_t>(state.range(0))).word();
  for (auto _ : state) benchmark::DoNotOptimize(validate_knot(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ValidateKnot)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_CanonicalRotation(benchmark::State& state) {
  const Word w = knot_of_length(static_cast<std::size_t>(state.range(0))).word();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_rotation(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CanonicalRotation)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_EnumerateSwitches(benchmark::State& state) {
  const KnotWord k = knot_of_length(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_switches(k, k.size() + 2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateSwitches)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_CompileDoublingTrefoil(benchmark::State& state) {
  const KnotWord t(parse_word(kTrefoil));
  for (auto _ : state) benchmark::DoNotOptimize(compile_doubling(t, Axis::Z));
}
BENCHMARK(BM_CompileDoublingTrefoil);

void BM_CompileDoublingRandom(benchmark::State& state) {
  const KnotWord k = knot_of_length(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const Axis a : kAxes) benchmark::DoNotOptimize(compile_doubling(k, a));
  }
}
BENCHMARK(BM_CompileDoublingRandom)->Arg(40)->Arg(120);

void BM_BfsSquareToBigSquare(benchmark::State& state) {
  const KnotWord a(parse_word(kSquare));
  const KnotWord b(parse_word("xxyyXXYY"));
  const SearchBudget budget{10, 1000000, 8};
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bfs_connect(a, b, budget, threads));
}
BENCHMARK(BM_BfsSquareToBigSquare)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
