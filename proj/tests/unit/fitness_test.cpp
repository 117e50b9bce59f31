#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "nqga/error.hpp"
#include "nqga/fitness.hpp"
#include "nqga/tuple_io.hpp"
#include "support/oracles.hpp"

namespace nqga {
namespace {

using testing::for_each_permutation;
using testing::penalty_from_counts;
using testing::random_permutation;
using testing::sorted_key_fitness;

TEST(Fitness, EightQueensWithOneSharedDiagonal) {
  const Chromosome c({8, 6, 4, 1, 3, 5, 7, 2});
  // Oracle first: columns 2 and 5 share row+col = 8, nothing else collides.
  ASSERT_EQ(testing::geometric_attacking_pairs(c.genes()), 1u);
  EXPECT_EQ(fitness(c).value, 1u);
}

TEST(Fitness, IdentityScoresNMinusOne) {
  EXPECT_EQ(fitness(Chromosome::identity(8)).value, 7u);
}

TEST(Fitness, SmallSolution) {
  const Chromosome c({2, 4, 1, 3});
  ASSERT_EQ(testing::geometric_attacking_pairs(c.genes()), 0u);
  EXPECT_EQ(fitness(c).value, 0u);
}

TEST(Fitness, KnownSolutionsScoreZero) {
  for (const char* name : {"queens50_a.txt", "queens50_b.txt", "queens100.txt"}) {
    const Chromosome c = parse_tuple(testing::read_fixture(name));
    EXPECT_EQ(fitness(c).value, 0u) << name;
  }
}

TEST(Fitness, ThreeOnOneDiagonalScoresTwoNotThree) {
  // Columns 1..3 on row-col = 0; the rest placed off that diagonal.
  const Chromosome c({1, 2, 3, 5, 4});
  const ConflictReport r = pairwise_attack_count(c);
  EXPECT_EQ(r.per_diagonal_counts.at({DiagonalKind::Difference, 0}), 3);
  EXPECT_EQ(fitness(c).value, penalty_from_counts(r));
  EXPECT_LT(fitness(c).value, r.attacking_pairs);
}

TEST(Fitness, RawGenesRejectNonPermutation) {
  EXPECT_THROW(fitness(std::vector<int>{2, 4, 4, 3}), PermutationError);
  EXPECT_THROW(fitness(std::vector<int>{}), PermutationError);
  EXPECT_EQ(fitness(std::vector<int>{2, 4, 1, 3}).value, 0u);
}

TEST(PairwiseAttackCount, Examples) {
  EXPECT_EQ(pairwise_attack_count(Chromosome({1, 2, 3, 4})).attacking_pairs, 6u);
  EXPECT_EQ(pairwise_attack_count(Chromosome({2, 4, 1, 3})).attacking_pairs, 0u);
  EXPECT_EQ(pairwise_attack_count(Chromosome({8, 6, 4, 1, 3, 5, 7, 2})).attacking_pairs, 1u);
  EXPECT_THROW(pairwise_attack_count(std::vector<int>{1, 1}), PermutationError);
}

TEST(PairwiseAttackCount, DiagonalIdsAreUnnormalized) {
  const ConflictReport r = pairwise_attack_count(Chromosome({2, 4, 1, 3}));
  // Each queen sits on exactly one diagonal of each kind.
  EXPECT_EQ(r.per_diagonal_counts.size(), 8u);
  EXPECT_EQ(r.per_diagonal_counts.at({DiagonalKind::Difference, 1}), 1);  // (col 1, row 2)
  EXPECT_EQ(r.per_diagonal_counts.at({DiagonalKind::Sum, 7}), 1);         // (col 4, row 3)
  EXPECT_EQ(r.per_diagonal_counts.at({DiagonalKind::Difference, -2}), 1);  // (col 3, row 1)
}

// fitness vs. oracle over every permutation of small boards.
class ExhaustiveFitness : public ::testing::TestWithParam<int> {};

TEST_P(ExhaustiveFitness, MatchesOracles) {
  const int n = GetParam();
  std::size_t visited = 0;
  for_each_permutation(n, [&](std::span<const int> p) {
    ++visited;
    const Chromosome c(std::vector<int>(p.begin(), p.end()));
    const auto f = fitness(c).value;
    const ConflictReport r = pairwise_attack_count(c);
    ASSERT_EQ(f, sorted_key_fitness(p));
    ASSERT_EQ(f, penalty_from_counts(r));
    ASSERT_EQ(f == 0, r.attacking_pairs == 0);
    ASSERT_EQ(r.attacking_pairs, testing::geometric_attacking_pairs(p));
    ASSERT_EQ(r.attacking_pairs, testing::pairs_from_counts(r));
    ASSERT_LE(f, max_fitness(n));
  });
  std::size_t factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= static_cast<std::size_t>(k);
  EXPECT_EQ(visited, factorial);
}

INSTANTIATE_TEST_SUITE_P(SmallBoards, ExhaustiveFitness, ::testing::Values(1, 2, 3, 4, 5, 6, 7));

class RandomFitness : public ::testing::TestWithParam<int> {};

TEST_P(RandomFitness, MatchesOraclesAndSymmetries) {
  const int n = GetParam();
  std::mt19937_64 gen(static_cast<std::uint64_t>(n) * 7919u);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<int> p = random_permutation(n, gen);
    const Chromosome c(p);
    const auto f = fitness(c).value;
    const ConflictReport r = pairwise_attack_count(c);
    ASSERT_EQ(f == 0, r.attacking_pairs == 0);
    ASSERT_EQ(f, penalty_from_counts(r));
    ASSERT_LE(f, max_fitness(n));

    std::reverse(p.begin(), p.end());
    ASSERT_EQ(fitness(Chromosome(p)).value, f) << "left-right reflection";
  }
}

INSTANTIATE_TEST_SUITE_P(LargerBoards, RandomFitness, ::testing::Values(20, 50, 100));

TEST(Fitness, CountingAgreesWithPseudocodeOnLargeRandomBoards) {
  std::mt19937_64 gen(42);
  for (int n : {500, 1000}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto p = random_permutation(n, gen);
      ASSERT_EQ(fitness(Chromosome(p)).value, sorted_key_fitness(p));
    }
  }
}

}  // namespace
}  // namespace nqga
