#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace nqga {

/// True iff `genes` holds each of 1..genes.size() exactly once.
bool validate_permutation(std::span<const int> genes) noexcept;

/// Throws PermutationError naming duplicated and missing values. Empty input is rejected.
void require_permutation(std::span<const int> genes);

/// One board arrangement: gene k (0-based storage) is the row of the queen in column k+1.
/// Rows and columns are 1-based at every public accessor.
class Chromosome {
 public:
  explicit Chromosome(std::vector<int> genes);

  static Chromosome identity(int n);

  int size() const noexcept { return static_cast<int>(genes_.size()); }
  std::span<const int> genes() const noexcept { return genes_; }

  /// Row of the queen standing in `column` (1-based).
  int row_of(int column) const { return genes_.at(static_cast<std::size_t>(column - 1)); }

  friend bool operator==(const Chromosome&, const Chromosome&) = default;
  friend auto operator<=>(const Chromosome&, const Chromosome&) = default;

 private:
  std::vector<int> genes_;
};

/// Conflict points; 0 means no two queens attack each other.
struct FitnessValue {
  std::uint32_t value = 0;

  bool solved() const noexcept { return value == 0; }

  friend bool operator==(FitnessValue, FitnessValue) = default;
  friend auto operator<=>(FitnessValue, FitnessValue) = default;
};

}  // namespace nqga
