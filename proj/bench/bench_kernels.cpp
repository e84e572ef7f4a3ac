// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "effres/census.hpp"
#include "effres/constructor.hpp"
#include "effres/decomposer.hpp"
#include "effres/tau.hpp"

using namespace effres;
using namespace effres::kernels;

namespace {

// Laplacian minor of a triangulated grid, a planar graph with many spanning trees.
IntMatrix grid_minor(int side) {
  std::vector<Edge> edges;
  auto id = [side](int r, int c) { return r * side + c; };
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      if (c + 1 < side) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < side) edges.emplace_back(id(r, c), id(r + 1, c));
      if (r + 1 < side && c + 1 < side) edges.emplace_back(id(r, c), id(r + 1, c + 1));
    }
  }
  return laplacian_minor_dense(side * side, edges, side * side - 1);
}

void BM_BareissSerial(benchmark::State& state) {
  const IntMatrix m = grid_minor(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_determinant_serial(m));
}

void BM_BareissParallel(benchmark::State& state) {
  const IntMatrix m = grid_minor(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_determinant_parallel(m));
}

void BM_TauSparse(benchmark::State& state) {
  const Certificate cert = realize(Rational(1, state.range(0)), ConstructorConfig::census_defaults());
  for (auto _ : state) benchmark::DoNotOptimize(tau(cert.graph, TauKernel::sparse));
  state.counters["V"] = static_cast<double>(cert.v_count);
}

void BM_TauDenseSerial(benchmark::State& state) {
  const Certificate cert = realize(Rational(1, state.range(0)), ConstructorConfig::census_defaults());
  for (auto _ : state) benchmark::DoNotOptimize(tau(cert.graph, TauKernel::dense_serial));
  state.counters["V"] = static_cast<double>(cert.v_count);
}

void BM_CensusSerial(benchmark::State& state) {
  const auto targets = census_targets(state.range(0));
  const ConstructorConfig config = ConstructorConfig::census_defaults();
  for (auto _ : state) benchmark::DoNotOptimize(census_serial(targets, config));
  state.counters["targets"] = static_cast<double>(targets.size());
}

void BM_CensusParallel(benchmark::State& state) {
  const auto targets = census_targets(state.range(0));
  const ConstructorConfig config = ConstructorConfig::census_defaults();
  for (auto _ : state) benchmark::DoNotOptimize(census(targets, config));
  state.counters["targets"] = static_cast<double>(targets.size());
}

const Rational kHardTarget(1, 1999);

void BM_DecomposeSerial(benchmark::State& state) {
  DecomposerBudget budget;
  budget.max_den = state.range(0);
  candidate_pool(budget.max_den, budget.max_quotient);  // exclude pool generation
  for (auto _ : state) benchmark::DoNotOptimize(decompose_search_serial(kHardTarget, budget));
}

void BM_DecomposeParallel(benchmark::State& state) {
  DecomposerBudget budget;
  budget.max_den = state.range(0);
  candidate_pool(budget.max_den, budget.max_quotient);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_search(kHardTarget, budget));
}

}  // namespace

BENCHMARK(BM_BareissSerial)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BareissParallel)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TauSparse)->Arg(100)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TauDenseSerial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecomposeSerial)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecomposeParallel)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
