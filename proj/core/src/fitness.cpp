#include "nqga/fitness.hpp"

#include <vector>

namespace nqga {

namespace {

// Sum keys c+i span [2, 2N]; difference keys c-i span [1-N, N-1]. Both fit in 2N+1 slots.
// t = N - (number of distinct keys) equals the count of adjacent equal pairs after sorting.
std::uint32_t direction_points(std::span<const int> genes, int sign, std::vector<bool>& seen) {
  const int n = static_cast<int>(genes.size());
  seen.assign(static_cast<std::size_t>(2 * n + 1), false);
  std::uint32_t points = 0;
  for (int col = 1; col <= n; ++col) {
    const int key = genes[static_cast<std::size_t>(col - 1)] + sign * col;
    const auto slot = static_cast<std::size_t>(sign > 0 ? key : key + n);
    if (seen[slot]) {
      ++points;
    } else {
      seen[slot] = true;
    }
  }
  return points;
}

FitnessValue score(std::span<const int> genes) {
  std::vector<bool> seen;
  const std::uint32_t diff = direction_points(genes, -1, seen);
  const std::uint32_t sum = direction_points(genes, +1, seen);
  return FitnessValue{diff + sum};
}

DiagonalId difference_diagonal(int col, int row) { return {DiagonalKind::Difference, row - col}; }
DiagonalId sum_diagonal(int col, int row) { return {DiagonalKind::Sum, row + col}; }

ConflictReport enumerate_pairs(std::span<const int> genes) {
  ConflictReport report;
  const int n = static_cast<int>(genes.size());
  for (int i = 1; i <= n; ++i) {
    const int ci = genes[static_cast<std::size_t>(i - 1)];
    ++report.per_diagonal_counts[difference_diagonal(i, ci)];
    ++report.per_diagonal_counts[sum_diagonal(i, ci)];
    for (int j = i + 1; j <= n; ++j) {
      const int cj = genes[static_cast<std::size_t>(j - 1)];
      if (ci - i == cj - j || ci + i == cj + j) ++report.attacking_pairs;
    }
  }
  return report;
}

}  // namespace

FitnessValue fitness(const Chromosome& chrom) noexcept { return score(chrom.genes()); }

FitnessValue fitness(std::span<const int> genes) {
  require_permutation(genes);
  return score(genes);
}

ConflictReport pairwise_attack_count(const Chromosome& chrom) { return enumerate_pairs(chrom.genes()); }

ConflictReport pairwise_attack_count(std::span<const int> genes) {
  require_permutation(genes);
  return enumerate_pairs(genes);
}

}  // namespace nqga
