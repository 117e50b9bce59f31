#pragma once

#include <span>
#include <utility>
#include <vector>

#include "nqga/chromosome.hpp"
#include "nqga/random.hpp"

namespace nqga {

/// Inclusive 1-based column segment [lo, hi].
struct CutPair {
  int lo = 1;
  int hi = 1;

  friend bool operator==(const CutPair&, const CutPair&) = default;
};

struct OperatorParams {
  double crossover_prob = 0.9;
  double mutation_prob = 0.8;
  double double_mutation_prob = 0.4;

  /// Throws ConfigError unless every probability lies in [0, 1].
  void validate() const;
};

struct Member {
  Chromosome chromosome;
  FitnessValue fitness;
};

/// Two distinct columns drawn uniformly and ordered; (1, 1) when n == 1.
CutPair random_cuts(int n, Rng& rng);

/// Copies parent1[lo..hi] into the child, then fills the other columns left to right with
/// parent2's remaining values in parent2's order.
Chromosome order1_crossover(const Chromosome& parent1, const Chromosome& parent2, CutPair cuts);

/// {order1_crossover(a, b, cuts_ab), order1_crossover(b, a, cuts_ba)}.
std::pair<Chromosome, Chromosome> crossover_pair(const Chromosome& a, const Chromosome& b,
                                                 CutPair cuts_ab, CutPair cuts_ba);

/// Exchanges the genes in columns i and j (1-based, i != j).
Chromosome swap_mutation(const Chromosome& chrom, int i, int j);

/// A swap at random distinct columns with probability mutation_prob, then independently a
/// second swap with probability double_mutation_prob. Boards with one column never change.
Chromosome apply_mutation_policy(const Chromosome& chrom, const OperatorParams& params, Rng& rng);

/// Ranks by ascending fitness (stable), keeps the best ceil(size / 2), and draws `count`
/// members uniformly with replacement from them.
std::vector<Chromosome> rank_select(std::span<const Member> population, std::size_t count, Rng& rng);

}  // namespace nqga
