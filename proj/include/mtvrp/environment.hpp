#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "mtvrp/instance.hpp"
#include "mtvrp/solution.hpp"

namespace mtvrp {

class InvalidStart : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IllegalAction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class TerminalState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Slack added to the right-hand side of every feasibility comparison.
inline constexpr double kFeasibilityTol = 1e-9;

struct RolloutState {
  int current_node = 0;
  double used_linehaul = 0.0;
  double used_backhaul = 0.0;
  double clock = 0.0;
  double route_length = 0.0;
  std::vector<bool> visited;  // per customer, indexed by node - m
  int num_visited = 0;
  int origin_depot = 0;
  bool carrying_backhaul = false;
  // Set right after a depot action closed a route; allows one origin switch.
  bool route_closed = false;
  bool done = false;
  std::vector<int> actions;

  bool at_depot(const Instance& instance) const { return instance.is_depot(current_node); }
};

// Fresh state at depot 0. A forced first action must be a customer when
// m == 1 (the state is then advanced onto it) and a depot when m > 1.
RolloutState reset(const Instance& instance, std::optional<int> forced_first_action = std::nullopt);

// True where moving to the node keeps the partial solution feasible.
std::vector<bool> action_mask(const Instance& instance, const RolloutState& state);

RolloutState step(const Instance& instance, RolloutState state, int action);

// Negative travelled length; open routes drop the return leg.
double reward(const Instance& instance, const Solution& solution);

// Solution for a finished trajectory.
Solution to_solution(const Instance& instance, const RolloutState& state);

}  // namespace mtvrp
