#include "mtvrp/heuristics.hpp"

#include <algorithm>
#include <limits>

#include "mtvrp/environment.hpp"
#include "mtvrp/validator.hpp"

namespace mtvrp {

namespace {

constexpr double kMinGain = 1e-10;

template <typename Choose>
Solution rollout(const Instance& instance, Choose&& choose) {
  RolloutState state = reset(instance);
  while (!state.done) {
    const std::vector<bool> mask = action_mask(instance, state);
    const int action = choose(state, mask);
    if (state.at_depot(instance) && action == state.current_node) {
      throw Unserviceable("no remaining customer can be served from any depot");
    }
    state = step(instance, std::move(state), action);
  }
  return to_solution(instance, state);
}

bool feasible(const Instance& instance, const Route& route) {
  return route_violations(instance, route).empty();
}

// First improving 2-opt move, applied in place.
bool try_two_opt(const Instance& instance, std::vector<Route>& routes) {
  for (auto& route : routes) {
    const auto len = route.customers.size();
    const double before = route_cost(instance, route);
    for (std::size_t i = 0; i + 1 < len; ++i) {
      for (std::size_t j = i + 1; j < len; ++j) {
        Route candidate = route;
        std::reverse(candidate.customers.begin() + static_cast<std::ptrdiff_t>(i),
                     candidate.customers.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        if (route_cost(instance, candidate) < before - kMinGain && feasible(instance, candidate)) {
          route = std::move(candidate);
          return true;
        }
      }
    }
  }
  return false;
}

// First improving move of one customer into another route, applied in place.
bool try_relocate(const Instance& instance, std::vector<Route>& routes) {
  for (std::size_t a = 0; a < routes.size(); ++a) {
    const double cost_a = route_cost(instance, routes[a]);
    for (std::size_t i = 0; i < routes[a].customers.size(); ++i) {
      Route shrunk = routes[a];
      const int node = shrunk.customers[i];
      shrunk.customers.erase(shrunk.customers.begin() + static_cast<std::ptrdiff_t>(i));
      const double cost_shrunk = route_cost(instance, shrunk);
      if (!shrunk.customers.empty() && !feasible(instance, shrunk)) continue;

      for (std::size_t b = 0; b < routes.size(); ++b) {
        if (b == a) continue;
        const double cost_b = route_cost(instance, routes[b]);
        for (std::size_t j = 0; j <= routes[b].customers.size(); ++j) {
          Route grown = routes[b];
          grown.customers.insert(grown.customers.begin() + static_cast<std::ptrdiff_t>(j), node);
          const double delta = cost_shrunk + route_cost(instance, grown) - cost_a - cost_b;
          if (delta < -kMinGain && feasible(instance, grown)) {
            routes[b] = std::move(grown);
            if (shrunk.customers.empty()) {
              routes.erase(routes.begin() + static_cast<std::ptrdiff_t>(a));
            } else {
              routes[a] = std::move(shrunk);
            }
            return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

std::string_view method_name(SolverMethod method) {
  switch (method) {
    case SolverMethod::kGreedy: return "greedy";
    case SolverMethod::kRandom: return "random";
    case SolverMethod::kGreedyLocalSearch: return "greedy+ls";
  }
  return "?";
}

SolverMethod parse_method(std::string_view name) {
  for (auto m : {SolverMethod::kGreedy, SolverMethod::kRandom, SolverMethod::kGreedyLocalSearch}) {
    if (method_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown method: " + std::string(name));
}

Solution greedy_construct(const Instance& instance) {
  return rollout(instance, [&](const RolloutState& state, const std::vector<bool>& mask) {
    int best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int j = instance.num_depots(); j < instance.num_nodes(); ++j) {
      if (!mask[static_cast<std::size_t>(j)]) continue;
      const double d = instance.distance(state.current_node, j);
      if (d < best_dist) {
        best = j;
        best_dist = d;
      }
    }
    if (best >= 0) return best;
    for (int d = 0; d < instance.num_depots(); ++d) {
      if (mask[static_cast<std::size_t>(d)]) return d;
    }
    throw std::logic_error("empty action mask");
  });
}

Solution random_rollout(const Instance& instance, Rng& rng) {
  return rollout(instance, [&](const RolloutState&, const std::vector<bool>& mask) {
    std::vector<int> legal;
    for (std::size_t j = 0; j < mask.size(); ++j) {
      if (mask[j]) legal.push_back(static_cast<int>(j));
    }
    if (legal.empty()) throw std::logic_error("empty action mask");
    return legal[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(legal.size()) - 1))];
  });
}

Solution local_search(const Instance& instance, const Solution& start, const SolverConfig& config) {
  if (config.ls_max_iters < 0) throw std::invalid_argument("ls_max_iters must be >= 0");
  if (!check(instance, start).feasible) throw InfeasibleStart("local search needs a feasible start");

  std::vector<Route> routes = start.routes;
  for (int iter = 0; iter < config.ls_max_iters; ++iter) {
    std::vector<Route> candidate = routes;
    if (!try_two_opt(instance, candidate) && !try_relocate(instance, candidate)) break;
    if (!check(instance, candidate).feasible) {
      throw std::logic_error("local search produced an infeasible solution");
    }
    routes = std::move(candidate);
  }
  if (routes == start.routes) return start;
  return make_solution(instance, std::move(routes));
}

Solution solve(const Instance& instance, const SolverConfig& config) {
  switch (config.method) {
    case SolverMethod::kGreedy:
      return greedy_construct(instance);
    case SolverMethod::kRandom: {
      Rng rng(config.seed);
      return random_rollout(instance, rng);
    }
    case SolverMethod::kGreedyLocalSearch:
      return local_search(instance, greedy_construct(instance), config);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace mtvrp
