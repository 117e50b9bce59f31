#include "nqga_cli/record.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "nqga/tuple_io.hpp"

namespace nqga::cli {

namespace {

using json = nlohmann::ordered_json;

// Shortest representation that reads back to the same double.
std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("cannot format probability");
  return std::string(buf, ptr);
}

template <typename T>
T parse_number(std::string_view field, const char* name) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::invalid_argument(std::string("bad CSV value for ") + name + ": '" +
                                std::string(field) + "'");
  }
  return value;
}

std::vector<std::string> split_csv(std::string_view row) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t k = 0; k < row.size(); ++k) {
    const char c = row[k];
    if (quoted) {
      if (c == '"' && k + 1 < row.size() && row[k + 1] == '"') {
        fields.back().push_back('"');
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r' && c != '\n') {
      fields.back().push_back(c);
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  return fields;
}

}  // namespace

ResultRecord make_record(const GAConfig& config, const SolveResult& result) {
  ResultRecord rec;
  rec.n = config.n;
  rec.seed = config.seed;
  rec.best_fitness = result.best_fitness.value;
  rec.solution = format_tuple(result.best);
  rec.generations_run = result.generations_run;
  rec.fitness_evaluations = result.fitness_evaluations;
  rec.wall_time_ms = result.wall_time_ms;
  rec.terminated_by = std::string(to_string(result.terminated_by));
  rec.population_size = config.population_size;
  rec.max_generations = config.max_generations;
  rec.stagnation_window = config.stagnation_window.value_or(0);
  rec.crossover_prob = config.operator_params.crossover_prob;
  rec.mutation_prob = config.operator_params.mutation_prob;
  rec.double_mutation_prob = config.operator_params.double_mutation_prob;
  rec.elitism = config.elitism_count;
  return rec;
}

std::string to_json_line(const ResultRecord& rec) {
  json j = json::object();
  j["n"] = rec.n;
  j["seed"] = rec.seed;
  j["best_fitness"] = rec.best_fitness;
  j["solution"] = rec.solution;
  j["generations_run"] = rec.generations_run;
  j["fitness_evaluations"] = rec.fitness_evaluations;
  j["wall_time_ms"] = rec.wall_time_ms;
  j["terminated_by"] = rec.terminated_by;
  j["params"] = {
      {"population_size", rec.population_size},
      {"max_generations", rec.max_generations},
      {"stagnation_window", rec.stagnation_window},
      {"crossover_prob", rec.crossover_prob},
      {"mutation_prob", rec.mutation_prob},
      {"double_mutation_prob", rec.double_mutation_prob},
      {"elitism", rec.elitism},
  };
  return j.dump();
}

ResultRecord record_from_json(std::string_view line) {
  const json j = json::parse(line);
  const json& p = j.at("params");
  ResultRecord rec;
  rec.n = j.at("n").get<int>();
  rec.seed = j.at("seed").get<std::uint64_t>();
  rec.best_fitness = j.at("best_fitness").get<std::uint32_t>();
  rec.solution = j.at("solution").get<std::string>();
  rec.generations_run = j.at("generations_run").get<std::uint64_t>();
  rec.fitness_evaluations = j.at("fitness_evaluations").get<std::uint64_t>();
  rec.wall_time_ms = j.at("wall_time_ms").get<std::uint64_t>();
  rec.terminated_by = j.at("terminated_by").get<std::string>();
  rec.population_size = p.at("population_size").get<std::size_t>();
  rec.max_generations = p.at("max_generations").get<std::uint64_t>();
  rec.stagnation_window = p.at("stagnation_window").get<std::uint64_t>();
  rec.crossover_prob = p.at("crossover_prob").get<double>();
  rec.mutation_prob = p.at("mutation_prob").get<double>();
  rec.double_mutation_prob = p.at("double_mutation_prob").get<double>();
  rec.elitism = p.at("elitism").get<std::size_t>();
  return rec;
}

std::string csv_header() {
  return "n,seed,best_fitness,generations_run,fitness_evaluations,wall_time_ms,terminated_by,"
         "solution,population_size,max_generations,stagnation_window,crossover_prob,"
         "mutation_prob,double_mutation_prob,elitism";
}

std::string to_csv_row(const ResultRecord& rec) {
  std::ostringstream os;
  os << rec.n << ',' << rec.seed << ',' << rec.best_fitness << ',' << rec.generations_run << ','
     << rec.fitness_evaluations << ',' << rec.wall_time_ms << ',' << rec.terminated_by << ",\""
     << rec.solution << "\"," << rec.population_size << ',' << rec.max_generations << ','
     << rec.stagnation_window << ',' << format_double(rec.crossover_prob) << ','
     << format_double(rec.mutation_prob) << ',' << format_double(rec.double_mutation_prob) << ','
     << rec.elitism;
  return os.str();
}

ResultRecord record_from_csv(std::string_view row) {
  const auto f = split_csv(row);
  if (f.size() != 15) {
    throw std::invalid_argument("expected 15 CSV fields, got " + std::to_string(f.size()));
  }
  ResultRecord rec;
  rec.n = parse_number<int>(f[0], "n");
  rec.seed = parse_number<std::uint64_t>(f[1], "seed");
  rec.best_fitness = parse_number<std::uint32_t>(f[2], "best_fitness");
  rec.generations_run = parse_number<std::uint64_t>(f[3], "generations_run");
  rec.fitness_evaluations = parse_number<std::uint64_t>(f[4], "fitness_evaluations");
  rec.wall_time_ms = parse_number<std::uint64_t>(f[5], "wall_time_ms");
  rec.terminated_by = f[6];
  rec.solution = f[7];
  rec.population_size = parse_number<std::size_t>(f[8], "population_size");
  rec.max_generations = parse_number<std::uint64_t>(f[9], "max_generations");
  rec.stagnation_window = parse_number<std::uint64_t>(f[10], "stagnation_window");
  rec.crossover_prob = parse_number<double>(f[11], "crossover_prob");
  rec.mutation_prob = parse_number<double>(f[12], "mutation_prob");
  rec.double_mutation_prob = parse_number<double>(f[13], "double_mutation_prob");
  rec.elitism = parse_number<std::size_t>(f[14], "elitism");
  return rec;
}

std::string to_text(const ResultRecord& rec) {
  std::ostringstream os;
  os << "n: " << rec.n << '\n'
     << "seed: " << rec.seed << '\n'
     << "best_fitness: " << rec.best_fitness << '\n'
     << "solution: " << rec.solution << '\n'
     << "generations_run: " << rec.generations_run << '\n'
     << "fitness_evaluations: " << rec.fitness_evaluations << '\n'
     << "wall_time_ms: " << rec.wall_time_ms << '\n'
     << "terminated_by: " << rec.terminated_by << '\n'
     << "population_size: " << rec.population_size << '\n'
     << "max_generations: " << rec.max_generations << '\n'
     << "stagnation_window: " << rec.stagnation_window << '\n'
     << "crossover_prob: " << format_double(rec.crossover_prob) << '\n'
     << "mutation_prob: " << format_double(rec.mutation_prob) << '\n'
     << "double_mutation_prob: " << format_double(rec.double_mutation_prob) << '\n'
     << "elitism: " << rec.elitism << '\n';
  return os.str();
}

}  // namespace nqga::cli
