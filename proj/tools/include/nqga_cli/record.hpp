#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "nqga/engine.hpp"

namespace nqga::cli {

/// One engine run as written by `solve` and `bench`.
struct ResultRecord {
  int n = 0;
  std::uint64_t seed = 0;
  std::uint32_t best_fitness = 0;
  std::string solution;  // tuple text
  std::uint64_t generations_run = 0;
  std::uint64_t fitness_evaluations = 0;
  std::uint64_t wall_time_ms = 0;
  std::string terminated_by;

  std::size_t population_size = 0;
  std::uint64_t max_generations = 0;
  std::uint64_t stagnation_window = 0;  // 0 = disabled
  double crossover_prob = 0.0;
  double mutation_prob = 0.0;
  double double_mutation_prob = 0.0;
  std::size_t elitism = 0;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

ResultRecord make_record(const GAConfig& config, const SolveResult& result);

/// Single-line JSON object (no trailing newline); parameters nested under "params".
std::string to_json_line(const ResultRecord& rec);
ResultRecord record_from_json(std::string_view line);

/// Columns: n,seed,best_fitness,generations_run,fitness_evaluations,wall_time_ms,terminated_by,
/// solution, then population_size,max_generations,stagnation_window,crossover_prob,
/// mutation_prob,double_mutation_prob,elitism. The solution field is always double-quoted.
std::string csv_header();
std::string to_csv_row(const ResultRecord& rec);
ResultRecord record_from_csv(std::string_view row);

/// "key: value" lines, newline-terminated.
std::string to_text(const ResultRecord& rec);

}  // namespace nqga::cli
