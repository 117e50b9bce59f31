#include "nqga/chromosome.hpp"

#include <numeric>
#include <sstream>

#include "nqga/error.hpp"

namespace nqga {

namespace {

std::string describe(const std::vector<int>& values) {
  std::ostringstream os;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k != 0) os << ',';
    os << values[k];
  }
  return os.str();
}

std::string permutation_message(const std::vector<int>& duplicated, const std::vector<int>& missing,
                                std::size_t length) {
  if (length == 0) return "empty gene sequence";
  std::ostringstream os;
  os << "not a permutation of 1.." << length;
  if (!duplicated.empty()) os << "; duplicated: " << describe(duplicated);
  if (!missing.empty()) os << "; missing: " << describe(missing);
  return os.str();
}

}  // namespace

PermutationError::PermutationError(std::vector<int> duplicated, std::vector<int> missing,
                                   std::size_t length)
    : std::invalid_argument(permutation_message(duplicated, missing, length)),
      duplicated_(std::move(duplicated)),
      missing_(std::move(missing)) {}

ParseError::ParseError(std::size_t position, std::string token, const std::string& reason)
    : std::invalid_argument("element " + std::to_string(position) + " ('" + token + "'): " + reason),
      position_(position),
      token_(std::move(token)) {}

bool validate_permutation(std::span<const int> genes) noexcept {
  const auto n = genes.size();
  std::vector<bool> seen(n + 1, false);
  for (int g : genes) {
    if (g < 1 || static_cast<std::size_t>(g) > n || seen[static_cast<std::size_t>(g)]) return false;
    seen[static_cast<std::size_t>(g)] = true;
  }
  return true;
}

void require_permutation(std::span<const int> genes) {
  if (genes.empty()) throw PermutationError({}, {}, 0);
  if (validate_permutation(genes)) return;

  const auto n = genes.size();
  std::vector<int> count(n + 1, 0);
  std::vector<int> duplicated;
  for (int g : genes) {
    if (g < 1 || static_cast<std::size_t>(g) > n) {
      // Out-of-range values are reported as duplicates of nothing; list them with the extras.
      duplicated.push_back(g);
      continue;
    }
    if (++count[static_cast<std::size_t>(g)] == 2) duplicated.push_back(g);
  }
  std::vector<int> missing;
  for (std::size_t v = 1; v <= n; ++v) {
    if (count[v] == 0) missing.push_back(static_cast<int>(v));
  }
  throw PermutationError(std::move(duplicated), std::move(missing), n);
}

Chromosome::Chromosome(std::vector<int> genes) : genes_(std::move(genes)) {
  require_permutation(genes_);
}

Chromosome Chromosome::identity(int n) {
  std::vector<int> genes(static_cast<std::size_t>(n));
  std::iota(genes.begin(), genes.end(), 1);
  return Chromosome(std::move(genes));
}

}  // namespace nqga
