#pragma once

// Test-only reference computations. Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "nqga/fitness.hpp"

namespace nqga::testing {

// Sort-based scoring: sort the c-i keys and the (1+N)-c-i keys, count adjacent equal entries.
inline std::uint32_t sorted_key_fitness(std::span<const int> chromosome) {
  const int size = static_cast<int>(chromosome.size());
  std::vector<int> f1(chromosome.size());
  std::vector<int> f2(chromosome.size());
  for (int i = 1; i <= size; ++i) {
    f1[static_cast<std::size_t>(i - 1)] = chromosome[static_cast<std::size_t>(i - 1)] - i;
    f2[static_cast<std::size_t>(i - 1)] = (1 + size) - chromosome[static_cast<std::size_t>(i - 1)] - i;
  }
  std::sort(f1.begin(), f1.end());
  std::sort(f2.begin(), f2.end());
  std::uint32_t t1 = 0;
  std::uint32_t t2 = 0;
  for (std::size_t i = 1; i < f1.size(); ++i) {
    if (f1[i] == f1[i - 1]) ++t1;
    if (f2[i] == f2[i - 1]) ++t2;
  }
  return t1 + t2;
}

// Every unordered pair, plain geometry: same diagonal iff |dr| == |dc|.
inline std::uint64_t geometric_attacking_pairs(std::span<const int> c) {
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const auto dc = static_cast<long>(j - i);
      const long dr = std::labs(static_cast<long>(c[j]) - static_cast<long>(c[i]));
      if (dr == dc) ++pairs;
    }
  }
  return pairs;
}

inline std::uint32_t penalty_from_counts(const ConflictReport& report) {
  std::uint32_t total = 0;
  for (const auto& [id, k] : report.per_diagonal_counts) {
    if (k > 1) total += static_cast<std::uint32_t>(k - 1);
  }
  return total;
}

inline std::uint64_t pairs_from_counts(const ConflictReport& report) {
  std::uint64_t total = 0;
  for (const auto& [id, k] : report.per_diagonal_counts) {
    total += static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k - 1) / 2;
  }
  return total;
}

template <typename F>
void for_each_permutation(int n, F&& visit) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    visit(std::span<const int>(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& gen) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), gen);
  return p;
}

// Minimum fitness over every permutation of 1..n.
inline std::uint32_t exhaustive_min_fitness(int n) {
  std::uint32_t best = UINT32_MAX;
  for_each_permutation(n, [&](std::span<const int> p) { best = std::min(best, sorted_key_fitness(p)); });
  return best;
}

// True iff `sub` appears in `seq` in the same relative order.
inline bool is_subsequence(std::span<const int> sub, std::span<const int> seq) {
  std::size_t k = 0;
  for (int v : seq) {
    if (k < sub.size() && sub[k] == v) ++k;
  }
  return k == sub.size();
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(NQGA_FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(NQGA_FIXTURE_DIR) + "/" + name;
}

}  // namespace nqga::testing
