#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtvrp/heuristics.hpp"
#include "mtvrp/multitask.hpp"

namespace mtvrp {

// Percentage excess of obj over ref. Throws std::domain_error for ref <= 0.
double gap(double obj, double ref);

struct BenchRecord {
  std::string instance_id;
  std::string variant;
  std::string method;
  double cost = 0.0;
  std::optional<double> reference_cost;
  std::optional<double> gap_percent;
  std::int64_t wall_time_ms = 0;
  std::optional<double> normalized_reward;
};

struct BenchSuite {
  std::uint64_t seed = 0;
  int n = 20;
  int m = 3;  // depot count for MD variants
  int count = 1;
  std::vector<VariantFlags> variants;
  std::vector<SolverMethod> methods = {SolverMethod::kGreedy};
  // Explicit instance files; when non-empty they replace generation.
  std::vector<std::filesystem::path> instance_files;
};

// {"seed", "n", "m", "count", "variants": ["all" | names], "methods", "instances"}.
// Relative instance paths resolve against the suite file's directory.
BenchSuite read_suite(const std::filesystem::path& path);

// CSV with header "instance_id,reference_cost".
std::map<std::string, double> read_refs(const std::filesystem::path& path);

struct BenchOptions {
  std::optional<NormMode> reward_norm;
  double alpha = 0.25;
  bool timing = true;
  int threads = 0;  // 0 = hardware concurrency
};

// Instance `index` of `variant` for a generated suite: the full instance for
// (seed, index) with the depot count and backhaul class the variant needs,
// reduced with apply_flags.
Instance suite_instance(const BenchSuite& suite, const VariantFlags& variant, int index);
std::string suite_instance_id(const VariantFlags& variant, int index);

// Records are ordered by instance index, then variant, then method. With a
// reward normalizer, every instance index forms one mixed batch per method.
std::vector<BenchRecord> run_bench(const BenchSuite& suite, const std::map<std::string, double>& refs,
                                   const BenchOptions& options);

std::string records_to_csv(const std::vector<BenchRecord>& records);
std::string records_to_json(const std::vector<BenchRecord>& records);

}  // namespace mtvrp
