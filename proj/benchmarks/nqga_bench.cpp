#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>

#include "nqga/engine.hpp"
#include "nqga/fitness.hpp"
#include "nqga/operators.hpp"

namespace {

nqga::Chromosome shuffled(int n, nqga::Rng& rng) {
  std::vector<int> genes(static_cast<std::size_t>(n));
  std::iota(genes.begin(), genes.end(), 1);
  std::shuffle(genes.begin(), genes.end(), rng.engine());
  return nqga::Chromosome(std::move(genes));
}

void BM_Fitness(benchmark::State& state) {
  nqga::Rng rng(1);
  const auto chrom = shuffled(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(nqga::fitness(chrom));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fitness)->RangeMultiplier(2)->Range(8, 1024)->Complexity();

void BM_PairwiseOracle(benchmark::State& state) {
  nqga::Rng rng(1);
  const auto chrom = shuffled(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(nqga::pairwise_attack_count(chrom));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PairwiseOracle)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_Order1Crossover(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  nqga::Rng rng(2);
  const auto a = shuffled(n, rng);
  const auto b = shuffled(n, rng);
  for (auto _ : state) {
    const auto cuts = nqga::random_cuts(n, rng);
    benchmark::DoNotOptimize(nqga::order1_crossover(a, b, cuts));
  }
}
BENCHMARK(BM_Order1Crossover)->Arg(8)->Arg(50)->Arg(100);

void BM_MutationPolicy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  nqga::Rng rng(3);
  const auto chrom = shuffled(n, rng);
  const nqga::OperatorParams params;
  for (auto _ : state) benchmark::DoNotOptimize(nqga::apply_mutation_policy(chrom, params, rng));
}
BENCHMARK(BM_MutationPolicy)->Arg(8)->Arg(50)->Arg(100);

void BM_Generation(benchmark::State& state) {
  nqga::GAConfig config;
  config.n = static_cast<int>(state.range(0));
  nqga::Rng rng(4);
  nqga::Evaluator eval;
  auto population = nqga::init_population(config, rng, eval);
  const auto repo = nqga::init_repository(config, population);
  for (auto _ : state) nqga::evolve_generation(population, repo, config, rng, eval);
}
BENCHMARK(BM_Generation)->Arg(8)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state) {
  nqga::GAConfig config;
  config.n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nqga::run(config));
    ++config.seed;
  }
}
BENCHMARK(BM_Solve)->Arg(8)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
