#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "nqga/chromosome.hpp"

namespace nqga {

/// Queens on a Difference diagonal share c_i - i; on a Sum diagonal they share c_i + i.
enum class DiagonalKind : std::uint8_t { Difference, Sum };

struct DiagonalId {
  DiagonalKind kind;
  int index;  // c_i - i or c_i + i, unnormalized

  friend auto operator<=>(const DiagonalId&, const DiagonalId&) = default;
};

struct ConflictReport {
  std::uint64_t attacking_pairs = 0;
  std::map<DiagonalId, int> per_diagonal_counts;
};

/// Every diagonal holding k > 1 queens adds k - 1 points, summed over both diagonal kinds.
FitnessValue fitness(const Chromosome& chrom) noexcept;

/// Same as above for raw genes; throws PermutationError if `genes` is not a permutation.
FitnessValue fitness(std::span<const int> genes);

/// Brute-force check of all unordered column pairs. Slow (O(N^2)); used to verify `fitness`.
ConflictReport pairwise_attack_count(const Chromosome& chrom);
ConflictReport pairwise_attack_count(std::span<const int> genes);

/// Largest value `fitness` can take on an N-board.
constexpr std::uint32_t max_fitness(int n) noexcept {
  return n <= 1 ? 0u : 2u * static_cast<std::uint32_t>(n - 1);
}

}  // namespace nqga
