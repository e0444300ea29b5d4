#include "mtvrp/environment.hpp"

#include <algorithm>
#include <string>

namespace mtvrp {

namespace {

struct Cursor {
  int node;
  int origin;
  double clock;
  double length;
  double used_linehaul;
  double used_backhaul;
  bool carrying_backhaul;
};

Cursor cursor_of(const RolloutState& s) {
  return {s.current_node, s.origin_depot,   s.clock,
          s.route_length, s.used_linehaul, s.used_backhaul,
          s.carrying_backhaul};
}

Cursor fresh_at(int depot) { return {depot, depot, 0.0, 0.0, 0.0, 0.0, false}; }

// Checks a)-d) for appending customer j to the route described by `c`.
bool can_append(const Instance& inst, const Cursor& c, int j) {
  const double d = inst.distance(c.node, j);
  const double arrival = c.clock + d;
  const double length = c.length + d;
  if (!(arrival < inst.tw_end(j) + kFeasibilityTol)) return false;
  if (!(length < inst.distance_limit() + kFeasibilityTol)) return false;
  if (!inst.open()) {
    const double back = inst.distance(j, c.origin);
    const double depart = std::max(arrival, inst.tw_start(j)) + inst.service(j);
    if (!(depart + back < inst.t_max() + kFeasibilityTol)) return false;
    if (!(length + back < inst.distance_limit() + kFeasibilityTol)) return false;
  }
  const double q = inst.linehaul(j);
  const double p = inst.backhaul(j);
  if (!(c.used_linehaul + q <= 1.0 + kFeasibilityTol)) return false;
  if (!(c.used_backhaul + p <= 1.0 + kFeasibilityTol)) return false;
  if (inst.mixed()) {
    // Deliveries still on board must fit next to what was picked up.
    if (!(c.used_backhaul + q <= 1.0 + kFeasibilityTol)) return false;
  } else if (c.carrying_backhaul && p == 0.0) {
    return false;
  }
  return true;
}

bool is_visited(const Instance& inst, const RolloutState& s, int j) {
  return s.visited[static_cast<std::size_t>(j - inst.num_depots())];
}

bool serves_any(const Instance& inst, const RolloutState& s, const Cursor& c) {
  for (int j = inst.num_depots(); j < inst.num_nodes(); ++j) {
    if (!is_visited(inst, s, j) && can_append(inst, c, j)) return true;
  }
  return false;
}

}  // namespace

RolloutState reset(const Instance& instance, std::optional<int> forced_first_action) {
  RolloutState s;
  s.visited.assign(static_cast<std::size_t>(instance.num_customers()), false);
  s.actions = {0};
  if (!forced_first_action) return s;

  const int forced = *forced_first_action;
  if (instance.num_depots() == 1) {
    if (!instance.is_customer(forced)) {
      throw InvalidStart("single-depot multistart must force a customer");
    }
    if (!action_mask(instance, s)[static_cast<std::size_t>(forced)]) {
      throw InvalidStart("forced customer " + std::to_string(forced) + " is infeasible");
    }
    return step(instance, std::move(s), forced);
  }
  if (!instance.is_depot(forced)) throw InvalidStart("multi-depot multistart must force a depot");
  s.current_node = forced;
  s.origin_depot = forced;
  s.actions = {forced};
  return s;
}

std::vector<bool> action_mask(const Instance& instance, const RolloutState& state) {
  if (state.done) throw TerminalState("action_mask called on a finished trajectory");
  const int m = instance.num_depots();
  std::vector<bool> mask(static_cast<std::size_t>(instance.num_nodes()), false);

  const Cursor here = cursor_of(state);
  bool any_customer = false;
  for (int j = m; j < instance.num_nodes(); ++j) {
    if (!is_visited(instance, state, j) && can_append(instance, here, j)) {
      mask[static_cast<std::size_t>(j)] = true;
      any_customer = true;
    }
  }

  if (!state.at_depot(instance)) {
    // Mid-route the only depot is the one the route started from.
    mask[static_cast<std::size_t>(state.origin_depot)] = true;
    return mask;
  }

  // At a depot with an empty route: never stay, but another depot may take
  // over when it can serve someone and either this route just closed or this
  // depot has nobody left it can serve.
  bool any_depot = false;
  if (state.route_closed || !any_customer) {
    for (int d = 0; d < m; ++d) {
      if (d != state.current_node && serves_any(instance, state, fresh_at(d))) {
        mask[static_cast<std::size_t>(d)] = true;
        any_depot = true;
      }
    }
  }
  if (!any_customer && !any_depot) {
    // Nothing is serviceable from anywhere; keep one legal action.
    mask[static_cast<std::size_t>(state.current_node)] = true;
  }
  return mask;
}

RolloutState step(const Instance& instance, RolloutState s, int action) {
  if (s.done) throw TerminalState("step called on a finished trajectory");
  if (action < 0 || action >= instance.num_nodes() ||
      !action_mask(instance, s)[static_cast<std::size_t>(action)]) {
    throw IllegalAction("action " + std::to_string(action) + " is masked");
  }
  s.actions.push_back(action);

  if (instance.is_customer(action)) {
    if (s.at_depot(instance)) s.origin_depot = s.current_node;
    const double d = instance.distance(s.current_node, action);
    s.clock = std::max(s.clock + d, instance.tw_start(action)) + instance.service(action);
    s.route_length += d;
    s.used_linehaul += instance.linehaul(action);
    s.used_backhaul += instance.backhaul(action);
    if (instance.backhaul(action) > 0.0) s.carrying_backhaul = true;
    s.visited[static_cast<std::size_t>(action - instance.num_depots())] = true;
    ++s.num_visited;
    s.route_closed = false;
    s.current_node = action;
    return s;
  }

  if (!s.at_depot(instance)) {
    s.route_closed = true;
  } else {
    s.route_closed = false;
    s.origin_depot = action;
  }
  s.current_node = action;
  s.clock = 0.0;
  s.route_length = 0.0;
  s.used_linehaul = 0.0;
  s.used_backhaul = 0.0;
  s.carrying_backhaul = false;
  s.done = s.num_visited == instance.num_customers();
  return s;
}

double reward(const Instance& instance, const Solution& solution) {
  return -routes_cost(instance, solution.routes);
}

Solution to_solution(const Instance& instance, const RolloutState& state) {
  if (!state.done) throw std::logic_error("trajectory is not finished");
  return make_solution(instance, state.actions);
}

}  // namespace mtvrp
