#pragma once

#include <stdexcept>
#include <vector>

#include "mtvrp/instance.hpp"

namespace mtvrp {

class MalformedSolution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Route {
  int depot = 0;
  std::vector<int> customers;
  // Depot that closed the route in the action trace; equals `depot` when
  // the route was built directly.
  int return_depot = 0;

  friend bool operator==(const Route&, const Route&) = default;
};

// An action trace starts with the depot the vehicle sits at and uses depot
// actions as route delimiters. Two consecutive depots switch the origin of
// the next route without travelling.
struct Solution {
  std::vector<int> actions;
  std::vector<Route> routes;
  double cost = 0.0;
};

// Length of one route; open routes skip the return leg.
double route_cost(const Instance& instance, const Route& route);
double routes_cost(const Instance& instance, const std::vector<Route>& routes);

// Cost computed by walking the trace edge by edge.
double actions_cost(const Instance& instance, const std::vector<int>& actions);

std::vector<Route> routes_from_actions(const Instance& instance, const std::vector<int>& actions);
std::vector<int> actions_from_routes(const std::vector<Route>& routes);

Solution make_solution(const Instance& instance, std::vector<int> actions);
Solution make_solution(const Instance& instance, std::vector<Route> routes);

}  // namespace mtvrp
