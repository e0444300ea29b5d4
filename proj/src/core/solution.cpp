#include "mtvrp/solution.hpp"

#include <string>

namespace mtvrp {

namespace {

void check_node(const Instance& instance, int node) {
  if (node < 0 || node >= instance.num_nodes()) {
    throw MalformedSolution("node index out of range: " + std::to_string(node));
  }
}

}  // namespace

double route_cost(const Instance& instance, const Route& route) {
  if (route.customers.empty()) return 0.0;
  double cost = instance.distance(route.depot, route.customers.front());
  for (std::size_t i = 1; i < route.customers.size(); ++i) {
    cost += instance.distance(route.customers[i - 1], route.customers[i]);
  }
  if (!instance.open()) cost += instance.distance(route.customers.back(), route.depot);
  return cost;
}

double routes_cost(const Instance& instance, const std::vector<Route>& routes) {
  double cost = 0.0;
  for (const auto& r : routes) cost += route_cost(instance, r);
  return cost;
}

double actions_cost(const Instance& instance, const std::vector<int>& actions) {
  double cost = 0.0;
  for (std::size_t i = 1; i < actions.size(); ++i) {
    const int from = actions[i - 1];
    const int to = actions[i];
    check_node(instance, from);
    check_node(instance, to);
    if (instance.is_depot(from) && instance.is_depot(to)) continue;  // origin switch
    if (instance.is_depot(to) && instance.open()) continue;
    cost += instance.distance(from, to);
  }
  return cost;
}

std::vector<Route> routes_from_actions(const Instance& instance, const std::vector<int>& actions) {
  std::vector<Route> routes;
  if (actions.empty()) return routes;
  check_node(instance, actions.front());
  if (!instance.is_depot(actions.front())) throw MalformedSolution("trace must start at a depot");

  int at_depot = actions.front();
  Route current;
  bool open_route = false;
  for (std::size_t i = 1; i < actions.size(); ++i) {
    const int node = actions[i];
    check_node(instance, node);
    if (instance.is_depot(node)) {
      if (open_route) {
        current.return_depot = node;
        routes.push_back(std::move(current));
        current = Route{};
        open_route = false;
      }
      at_depot = node;
    } else {
      if (!open_route) {
        current.depot = at_depot;
        open_route = true;
      }
      current.customers.push_back(node);
    }
  }
  if (open_route) throw MalformedSolution("trace ends inside a route");
  return routes;
}

std::vector<int> actions_from_routes(const std::vector<Route>& routes) {
  std::vector<int> actions;
  for (const auto& r : routes) {
    if (actions.empty() || actions.back() != r.depot) actions.push_back(r.depot);
    actions.insert(actions.end(), r.customers.begin(), r.customers.end());
    actions.push_back(r.return_depot);
  }
  return actions;
}

Solution make_solution(const Instance& instance, std::vector<int> actions) {
  Solution s;
  s.routes = routes_from_actions(instance, actions);
  s.actions = std::move(actions);
  s.cost = routes_cost(instance, s.routes);
  return s;
}

Solution make_solution(const Instance& instance, std::vector<Route> routes) {
  Solution s;
  for (const auto& r : routes) {
    check_node(instance, r.depot);
    for (int c : r.customers) check_node(instance, c);
  }
  s.actions = actions_from_routes(routes);
  s.routes = std::move(routes);
  s.cost = routes_cost(instance, s.routes);
  return s;
}

}  // namespace mtvrp
