#include <benchmark/benchmark.h>

#include <random>

#include "gks/automorphism.hpp"
#include "gks/codes.hpp"
#include "gks/hypercube.hpp"
#include "gks/minimal_search.hpp"
#include "gks/solver.hpp"
#include "gks/strategies.hpp"
#include "gks/tau.hpp"
#include "gks/upper_bound.hpp"
#include "gks/verify.hpp"

using namespace gks;

namespace {

HypercubeSubgraph random_subgraph(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::vector<Edge> edges;
  const auto cube = full_cube(n);
  for (const auto& e : cube.edges()) {
    if (keep(rng)) edges.push_back(e);
  }
  return HypercubeSubgraph(n, edges);
}

void BM_IsWinning(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = random_subgraph(n, 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_winning(g));
}
BENCHMARK(BM_IsWinning)->DenseRange(4, 10, 2);

void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = random_subgraph(n, 0.25, 2);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(3, 5);

void BM_MinimalSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_winning_subgraphs(n, 2));
}
BENCHMARK(BM_MinimalSearch)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_VerifyExhaustive(benchmark::State& state) {
  auto s = block_square_strategy(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_exhaustive(*s));
}
BENCHMARK(BM_VerifyExhaustive)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_VerifyStructuredComposed(benchmark::State& state) {
  auto s = alice_mode_compose(code6_strategy());
  for (auto _ : state) benchmark::DoNotOptimize(verify_structured(*s));
}
BENCHMARK(BM_VerifyStructuredComposed)->Unit(benchmark::kSecond)->Iterations(1);

void BM_TauMatching(benchmark::State& state) {
  auto code = hamming_code(4);
  for (auto _ : state) benchmark::DoNotOptimize(tau_matching(code, 4));
}
BENCHMARK(BM_TauMatching)->Unit(benchmark::kMillisecond);

void BM_UpperBoundTable(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(upper_bound_table(n_max));
}
BENCHMARK(BM_UpperBoundTable)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged benchmark_main archive carries LTO bytecode tied to one compiler
// build, so the main is defined here instead.
BENCHMARK_MAIN();
