#include "nqga/operators.hpp"

#include <algorithm>
#include <string>

#include "nqga/error.hpp"

namespace nqga {

namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

void require_cuts(CutPair cuts, int n) {
  if (cuts.lo < 1 || cuts.hi > n || cuts.lo > cuts.hi) {
    throw OperatorError("cut pair (" + std::to_string(cuts.lo) + ", " + std::to_string(cuts.hi) +
                        ") outside 1.." + std::to_string(n));
  }
}

std::pair<int, int> random_distinct_columns(int n, Rng& rng) {
  const auto i = rng.index(static_cast<std::size_t>(n));
  auto j = rng.index(static_cast<std::size_t>(n - 1));
  if (j >= i) ++j;
  return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
}

}  // namespace

void OperatorParams::validate() const {
  require_probability(crossover_prob, "crossover probability");
  require_probability(mutation_prob, "mutation probability");
  require_probability(double_mutation_prob, "double mutation probability");
}

CutPair random_cuts(int n, Rng& rng) {
  if (n <= 1) return {1, 1};
  const auto [a, b] = random_distinct_columns(n, rng);
  return {std::min(a, b), std::max(a, b)};
}

Chromosome order1_crossover(const Chromosome& parent1, const Chromosome& parent2, CutPair cuts) {
  const int n = parent1.size();
  if (parent2.size() != n) {
    throw OperatorError("parent lengths differ: " + std::to_string(n) + " vs " +
                        std::to_string(parent2.size()));
  }
  require_cuts(cuts, n);

  const auto p1 = parent1.genes();
  const auto p2 = parent2.genes();
  const auto lo = static_cast<std::size_t>(cuts.lo - 1);
  const auto hi = static_cast<std::size_t>(cuts.hi - 1);

  std::vector<int> child(static_cast<std::size_t>(n), 0);
  std::vector<bool> in_segment(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t k = lo; k <= hi; ++k) {
    child[k] = p1[k];
    in_segment[static_cast<std::size_t>(p1[k])] = true;
  }

  std::size_t slot = 0;
  for (int value : p2) {
    if (in_segment[static_cast<std::size_t>(value)]) continue;
    if (slot == lo) slot = hi + 1;
    child[slot++] = value;
  }
  return Chromosome(std::move(child));
}

std::pair<Chromosome, Chromosome> crossover_pair(const Chromosome& a, const Chromosome& b,
                                                 CutPair cuts_ab, CutPair cuts_ba) {
  return {order1_crossover(a, b, cuts_ab), order1_crossover(b, a, cuts_ba)};
}

Chromosome swap_mutation(const Chromosome& chrom, int i, int j) {
  const int n = chrom.size();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw OperatorError("swap columns (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") outside 1.." + std::to_string(n));
  }
  if (i == j) throw OperatorError("swap columns must differ, got " + std::to_string(i) + " twice");
  std::vector<int> genes(chrom.genes().begin(), chrom.genes().end());
  std::swap(genes[static_cast<std::size_t>(i - 1)], genes[static_cast<std::size_t>(j - 1)]);
  return Chromosome(std::move(genes));
}

Chromosome apply_mutation_policy(const Chromosome& chrom, const OperatorParams& params, Rng& rng) {
  Chromosome out = chrom;
  const int n = chrom.size();
  // Both gates are always drawn so the stream consumption does not depend on the outcome.
  const bool single = rng.gate(params.mutation_prob);
  const bool second = rng.gate(params.double_mutation_prob);
  if (n < 2) return out;
  if (single) {
    const auto [i, j] = random_distinct_columns(n, rng);
    out = swap_mutation(out, i, j);
  }
  if (second) {
    const auto [i, j] = random_distinct_columns(n, rng);
    out = swap_mutation(out, i, j);
  }
  return out;
}

std::vector<Chromosome> rank_select(std::span<const Member> population, std::size_t count, Rng& rng) {
  if (population.empty()) throw OperatorError("cannot select from an empty population");
  if (count == 0 || count > population.size()) {
    throw OperatorError("selection count " + std::to_string(count) + " outside 1.." +
                        std::to_string(population.size()));
  }

  std::vector<std::size_t> ranked(population.size());
  for (std::size_t k = 0; k < ranked.size(); ++k) ranked[k] = k;
  std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
    return population[a].fitness < population[b].fitness;
  });

  const std::size_t pool = (population.size() + 1) / 2;
  std::vector<Chromosome> chosen;
  chosen.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    chosen.push_back(population[ranked[rng.index(pool)]].chromosome);
  }
  return chosen;
}

}  // namespace nqga
