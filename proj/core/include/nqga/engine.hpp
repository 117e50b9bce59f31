#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nqga/chromosome.hpp"
#include "nqga/operators.hpp"
#include "nqga/random.hpp"

namespace nqga {

struct GAConfig {
  int n = 8;
  std::size_t population_size = 1000;
  std::uint64_t max_generations = 5000;
  /// Generations without strict best-fitness improvement before giving up; nullopt disables.
  std::optional<std::uint64_t> stagnation_window = 500;
  OperatorParams operator_params{};
  std::uint64_t seed = 0;
  std::size_t elitism_count = 1;

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;
};

/// Counts every fitness evaluation performed on behalf of a run.
class Evaluator {
 public:
  FitnessValue operator()(const Chromosome& chrom) noexcept;
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t count_ = 0;
};

/// Members kept sorted by ascending fitness; equal fitness keeps insertion order.
class Population {
 public:
  Population() = default;
  explicit Population(std::vector<Member> members);

  std::span<const Member> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Member& best() const { return members_.front(); }
  const Member& worst() const { return members_.back(); }

  /// Replaces the worst member iff `candidate` is strictly fitter. Returns true on replacement.
  bool replace_worst_if_better(Member candidate);

 private:
  std::vector<Member> members_;
};

/// Weak chromosomes captured at start-up. Contents never change afterwards.
class Repository {
 public:
  explicit Repository(std::vector<Chromosome> members) : members_(std::move(members)) {}

  std::span<const Chromosome> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  friend bool operator==(const Repository&, const Repository&) = default;

 private:
  std::vector<Chromosome> members_;
};

/// floor(sqrt(n)).
std::size_t repository_size(int n) noexcept;

enum class Termination { Continue, Solved, GenerationBudget, Stagnation };

std::string_view to_string(Termination t) noexcept;

struct SolveResult {
  Chromosome best = Chromosome::identity(1);
  FitnessValue best_fitness;
  std::uint64_t generations_run = 0;
  std::uint64_t fitness_evaluations = 0;
  std::uint64_t wall_time_ms = 0;
  Termination terminated_by = Termination::Continue;
  /// Best fitness after initialization and after every generation.
  std::vector<FitnessValue> best_trace;
};

Population init_population(const GAConfig& config, Rng& rng, Evaluator& eval);

/// Copies of the floor(sqrt(n)) worst members. Throws ConfigError if the population is smaller.
Repository init_repository(const GAConfig& config, const Population& population);

/// Two distinct repository members are crossed, both children mutated, and each competes for
/// the worst slot. Returns false without touching `rng` when the repository holds fewer than two.
bool repository_infusion_pair(const Repository& repo, Population& population,
                              const OperatorParams& params, Rng& rng, Evaluator& eval);

/// One repository member crossed with one population member (parent-1 = repository member);
/// the unmutated child competes for the worst slot. Returns false for an empty repository.
bool repository_infusion_single(const Repository& repo, Population& population, Rng& rng,
                                Evaluator& eval);

/// One generation: elites kept, rank-selected parents crossed and mutated, parents and children
/// pooled with the best population_size surviving, then both infusions.
void evolve_generation(Population& population, const Repository& repo, const GAConfig& config,
                       Rng& rng, Evaluator& eval);

/// Precedence: Solved, then GenerationBudget, then Stagnation.
Termination check_termination(std::span<const FitnessValue> best_trace, std::uint64_t generation,
                              const GAConfig& config);

struct GenerationView {
  std::uint64_t generation;
  const Population& population;
  const Repository& repository;
};

using GenerationObserver = std::function<void(const GenerationView&)>;

/// Full solve. The observer, if set, sees the state after initialization (generation 0) and
/// after each generation.
SolveResult run(const GAConfig& config, const GenerationObserver& observer = {});

}  // namespace nqga
