#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mtvrp/instance.hpp"
#include "mtvrp/rng.hpp"

namespace mtvrp {

class InfeasibleConfig : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct GeneratorConfig {
  int n = 20;
  int m = 1;
  std::uint64_t seed = 0;
  double l_max = 3.0;
  Range service = {0.15, 0.18};
  Range tw_length = {0.18, 0.2};
  double backhaul_probability = 0.2;
  double t_max = 4.6;
  // Sampled 50/50 when unset.
  std::optional<BackhaulClass> backhaul_class;
  int max_retries = 100;

  // GeneratorConfig with m = 3 for multi-depot generation.
  static GeneratorConfig multi_depot(int n, std::uint64_t seed);
};

// Vehicle capacity used for n customers. Throws std::domain_error for n < 1.
double capacity_for(int n);

struct Demands {
  std::vector<int> linehaul;
  std::vector<int> backhaul;
};

// Draws all linehaul values, then all backhaul values, then the 0.8/0.2
// selector for each customer.
Demands sample_demands(int n, Rng& rng, double backhaul_probability = 0.2);

struct TimeWindows {
  std::vector<double> start;
  std::vector<double> service;
  std::vector<double> end;
};

// `coords` holds the m depots first, then the customers; the result covers
// customers only. Throws InfeasibleConfig when t_max leaves no room for a
// customer (start upper bound below 1).
TimeWindows sample_time_windows(std::span<const Point> coords, int m, double t_max, Rng& rng,
                                Range service = {0.15, 0.18}, Range tw_length = {0.18, 0.2});

class InfeasibleGeometry : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// L ~ U(2 * max_i d(0, i), l_max); the bound always comes from depot 0.
// Throws InfeasibleGeometry when the lower bound reaches l_max.
double sample_distance_limit(std::span<const Point> coords, int m, double l_max, Rng& rng);

// Fully attributed instance (all flags on except MD when m == 1, and MB when
// the sampled backhaul class is traditional). Draws from `rng` in a fixed
// order: coordinates, demands, backhaul class, time windows, distance limit;
// a geometric failure restarts the whole draw up to max_retries times.
Instance generate_instance(const GeneratorConfig& config, Rng& rng);

// Instance `index` of the stream defined by config.seed.
Instance generate_instance(const GeneratorConfig& config, std::uint64_t index);

}  // namespace mtvrp
