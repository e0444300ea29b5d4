#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mtvrp/instance.hpp"
#include "mtvrp/rng.hpp"
#include "mtvrp/solution.hpp"

namespace mtvrp {

enum class SolverMethod { kGreedy, kRandom, kGreedyLocalSearch };

std::string_view method_name(SolverMethod method);
SolverMethod parse_method(std::string_view name);

struct SolverConfig {
  SolverMethod method = SolverMethod::kGreedy;
  std::uint64_t seed = 0;
  int ls_max_iters = 1000;  // accepted moves
};

// Raised when no customer can be served from any depot.
class Unserviceable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleStart : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Nearest feasible customer (ties to the lowest index); a depot only when no
// customer is feasible, the lowest-indexed one allowed.
Solution greedy_construct(const Instance& instance);

// Uniform choice among all feasible actions at every step.
Solution random_rollout(const Instance& instance, Rng& rng);

// First-improvement descent: intra-route 2-opt, then relocate between
// routes. Every accepted candidate is re-checked by the validator.
Solution local_search(const Instance& instance, const Solution& start, const SolverConfig& config);

Solution solve(const Instance& instance, const SolverConfig& config);

}  // namespace mtvrp
