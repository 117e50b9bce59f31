#include "nqga/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "nqga/error.hpp"
#include "nqga/fitness.hpp"

namespace nqga {

namespace {

bool fitter(const Member& a, const Member& b) { return a.fitness < b.fitness; }

// rank_select draws at most population-size parents per call.
std::vector<Chromosome> select_parents(std::span<const Member> members, std::size_t count, Rng& rng) {
  std::vector<Chromosome> parents;
  parents.reserve(count);
  while (parents.size() < count) {
    const auto batch = std::min(count - parents.size(), members.size());
    auto drawn = rank_select(members, batch, rng);
    std::move(drawn.begin(), drawn.end(), std::back_inserter(parents));
  }
  return parents;
}

Member evaluated(Chromosome chrom, Evaluator& eval) {
  const FitnessValue f = eval(chrom);
  return Member{std::move(chrom), f};
}

}  // namespace

void GAConfig::validate() const {
  if (n < 1) throw ConfigError("board size n must be at least 1, got " + std::to_string(n));
  if (population_size < 1) throw ConfigError("population size must be positive");
  if (n >= 2 && population_size < 2) {
    throw ConfigError("population size must be at least 2 when n >= 2");
  }
  if (elitism_count >= population_size) {
    throw ConfigError("elitism count " + std::to_string(elitism_count) +
                      " must be below population size " + std::to_string(population_size));
  }
  if (max_generations < 1) throw ConfigError("max generations must be positive");
  if (stagnation_window && *stagnation_window < 1) {
    throw ConfigError("stagnation window must be positive when enabled");
  }
  if (repository_size(n) > population_size) {
    throw ConfigError("repository of " + std::to_string(repository_size(n)) +
                      " exceeds population size " + std::to_string(population_size));
  }
  operator_params.validate();
}

FitnessValue Evaluator::operator()(const Chromosome& chrom) noexcept {
  ++count_;
  return fitness(chrom);
}

Population::Population(std::vector<Member> members) : members_(std::move(members)) {
  std::stable_sort(members_.begin(), members_.end(), fitter);
}

bool Population::replace_worst_if_better(Member candidate) {
  if (members_.empty() || !(candidate.fitness < members_.back().fitness)) return false;
  members_.pop_back();
  const auto at = std::upper_bound(members_.begin(), members_.end(), candidate, fitter);
  members_.insert(at, std::move(candidate));
  return true;
}

std::size_t repository_size(int n) noexcept {
  if (n < 1) return 0;
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > static_cast<std::size_t>(n)) --r;
  while ((r + 1) * (r + 1) <= static_cast<std::size_t>(n)) ++r;
  return r;
}

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::Continue: return "continue";
    case Termination::Solved: return "solved";
    case Termination::GenerationBudget: return "generation_budget";
    case Termination::Stagnation: return "stagnation";
  }
  return "unknown";
}

Population init_population(const GAConfig& config, Rng& rng, Evaluator& eval) {
  config.validate();
  std::vector<int> base(static_cast<std::size_t>(config.n));
  std::iota(base.begin(), base.end(), 1);

  std::vector<Member> members;
  members.reserve(config.population_size);
  for (std::size_t k = 0; k < config.population_size; ++k) {
    std::vector<int> genes = base;
    std::shuffle(genes.begin(), genes.end(), rng.engine());
    members.push_back(evaluated(Chromosome(std::move(genes)), eval));
  }
  return Population(std::move(members));
}

Repository init_repository(const GAConfig& config, const Population& population) {
  const std::size_t size = repository_size(config.n);
  if (size > population.size()) {
    throw ConfigError("repository of " + std::to_string(size) + " exceeds population size " +
                      std::to_string(population.size()));
  }
  const auto members = population.members();
  std::vector<Chromosome> weak;
  weak.reserve(size);
  for (auto it = members.end() - static_cast<std::ptrdiff_t>(size); it != members.end(); ++it) {
    weak.push_back(it->chromosome);
  }
  return Repository(std::move(weak));
}

bool repository_infusion_pair(const Repository& repo, Population& population,
                              const OperatorParams& params, Rng& rng, Evaluator& eval) {
  if (repo.size() < 2) return false;
  const auto pool = repo.members();
  const auto first = rng.index(pool.size());
  auto second = rng.index(pool.size() - 1);
  if (second >= first) ++second;

  const int n = pool[first].size();
  const CutPair cuts_ab = random_cuts(n, rng);
  const CutPair cuts_ba = random_cuts(n, rng);
  auto [child_a, child_b] = crossover_pair(pool[first], pool[second], cuts_ab, cuts_ba);

  Member a = evaluated(apply_mutation_policy(child_a, params, rng), eval);
  Member b = evaluated(apply_mutation_policy(child_b, params, rng), eval);
  population.replace_worst_if_better(std::move(a));
  population.replace_worst_if_better(std::move(b));
  return true;
}

bool repository_infusion_single(const Repository& repo, Population& population, Rng& rng,
                                Evaluator& eval) {
  if (repo.size() < 1 || population.size() < 1) return false;
  const Chromosome& weak = repo.members()[rng.index(repo.size())];
  const Chromosome& mate = population.members()[rng.index(population.size())].chromosome;
  const CutPair cuts = random_cuts(weak.size(), rng);
  population.replace_worst_if_better(evaluated(order1_crossover(weak, mate, cuts), eval));
  return true;
}

void evolve_generation(Population& population, const Repository& repo, const GAConfig& config,
                       Rng& rng, Evaluator& eval) {
  const auto members = population.members();
  const std::size_t elites = std::min(config.elitism_count, members.size());
  const std::size_t offspring = config.population_size - std::min(config.elitism_count, config.population_size);
  const std::size_t pairs = (offspring + 1) / 2;
  const OperatorParams& params = config.operator_params;

  const std::vector<Chromosome> parents = select_parents(members, 2 * pairs, rng);

  std::vector<Member> children;
  children.reserve(2 * pairs);
  for (std::size_t p = 0; p < pairs; ++p) {
    const Chromosome& a = parents[2 * p];
    const Chromosome& b = parents[2 * p + 1];
    std::pair<Chromosome, Chromosome> kids{a, b};
    if (rng.gate(params.crossover_prob)) {
      const CutPair cuts_ab = random_cuts(config.n, rng);
      const CutPair cuts_ba = random_cuts(config.n, rng);
      kids = crossover_pair(a, b, cuts_ab, cuts_ba);
    }
    children.push_back(evaluated(apply_mutation_policy(kids.first, params, rng), eval));
    if (children.size() < offspring) {
      children.push_back(evaluated(apply_mutation_policy(kids.second, params, rng), eval));
    }
  }

  // Pool order decides ties: elites first, then children, then the remaining parents.
  std::vector<Member> pool;
  pool.reserve(members.size() + children.size());
  pool.insert(pool.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(elites));
  std::move(children.begin(), children.end(), std::back_inserter(pool));
  pool.insert(pool.end(), members.begin() + static_cast<std::ptrdiff_t>(elites), members.end());
  std::stable_sort(pool.begin(), pool.end(), fitter);
  if (pool.size() > config.population_size) {
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(config.population_size), pool.end());
  }
  population = Population(std::move(pool));

  repository_infusion_pair(repo, population, params, rng, eval);
  repository_infusion_single(repo, population, rng, eval);
}

Termination check_termination(std::span<const FitnessValue> best_trace, std::uint64_t generation,
                              const GAConfig& config) {
  if (best_trace.empty()) return Termination::Continue;
  if (best_trace.back().solved()) return Termination::Solved;
  if (generation >= config.max_generations) return Termination::GenerationBudget;
  if (config.stagnation_window) {
    const auto window = *config.stagnation_window;
    if (best_trace.size() > window &&
        !(best_trace.back() < best_trace[best_trace.size() - 1 - window])) {
      return Termination::Stagnation;
    }
  }
  return Termination::Continue;
}

SolveResult run(const GAConfig& config, const GenerationObserver& observer) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  Rng rng(config.seed);
  Evaluator eval;
  Population population = init_population(config, rng, eval);
  const Repository repo = init_repository(config, population);

  SolveResult result;
  result.best_trace.push_back(population.best().fitness);
  std::uint64_t generation = 0;
  if (observer) observer(GenerationView{generation, population, repo});

  Termination status;
  while ((status = check_termination(result.best_trace, generation, config)) == Termination::Continue) {
    evolve_generation(population, repo, config, rng, eval);
    ++generation;
    result.best_trace.push_back(population.best().fitness);
    if (observer) observer(GenerationView{generation, population, repo});
  }

  result.best = population.best().chromosome;
  result.best_fitness = population.best().fitness;
  result.generations_run = generation;
  result.fitness_evaluations = eval.count();
  result.terminated_by = status;
  result.wall_time_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
          .count());
  return result;
}

}  // namespace nqga
