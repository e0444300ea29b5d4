#include "mtvrp/validator.hpp"

#include <algorithm>
#include <string>

namespace mtvrp {

namespace {

constexpr double kTol = 1e-9;

bool below(double value, double bound) { return value < bound + kTol; }
bool at_most(double value, double bound) { return value <= bound + kTol; }

// Appends the violations of a single route and returns its length.
double simulate_route(const Instance& inst, const Route& route, int index,
                      std::vector<Violation>& out) {
  const bool closed = !inst.open();
  const double limit = inst.distance_limit();
  const double horizon = inst.t_max();

  if (route.return_depot != route.depot) {
    out.push_back({Rule::kWrongDepotReturn, index, route.return_depot,
                   static_cast<double>(route.return_depot), static_cast<double>(route.depot)});
  }

  double time = 0.0;
  double length = 0.0;
  double delivered = 0.0;
  double picked = 0.0;
  bool linehaul_flagged = false;
  bool backhaul_flagged = false;
  bool pickup_seen = false;
  int prev = route.depot;

  for (int node : route.customers) {
    const double leg = inst.distance(prev, node);
    const double arrival = time + leg;
    length += leg;
    if (!below(arrival, inst.tw_end(node))) {
      out.push_back({Rule::kTimeWindow, index, node, arrival, inst.tw_end(node)});
    }
    time = std::max(arrival, inst.tw_start(node)) + inst.service(node);
    if (!below(length, limit)) out.push_back({Rule::kDurationLimit, index, node, length, limit});
    if (closed) {
      const double home = inst.distance(node, route.depot);
      if (!below(time + home, horizon)) {
        out.push_back({Rule::kTimeWindow, index, node, time + home, horizon});
      }
      if (!below(length + home, limit)) {
        out.push_back({Rule::kDurationLimit, index, node, length + home, limit});
      }
    }

    const double q = inst.linehaul(node);
    const double p = inst.backhaul(node);
    const bool is_pickup = p > 0.0;
    if (inst.mixed()) {
      // A delivery must fit next to the pickups already on board.
      if (!at_most(picked + q, 1.0) && !linehaul_flagged) {
        out.push_back({Rule::kCapacityLinehaul, index, node, picked + q, 1.0});
        linehaul_flagged = true;
      }
    } else if (!is_pickup && pickup_seen) {
      out.push_back({Rule::kBackhaulPrecedence, index, node, 0.0, 0.0});
    }
    delivered += q;
    picked += p;
    pickup_seen = pickup_seen || is_pickup;
    if (!at_most(delivered, 1.0) && !linehaul_flagged) {
      out.push_back({Rule::kCapacityLinehaul, index, node, delivered, 1.0});
      linehaul_flagged = true;
    }
    if (!at_most(picked, 1.0) && !backhaul_flagged) {
      out.push_back({Rule::kCapacityBackhaul, index, node, picked, 1.0});
      backhaul_flagged = true;
    }
    prev = node;
  }
  if (closed) length += inst.distance(prev, route.depot);
  return length;
}

}  // namespace

std::string_view rule_code(Rule rule) {
  switch (rule) {
    case Rule::kDuplicateVisit: return "DUPLICATE_VISIT";
    case Rule::kUnvisited: return "UNVISITED";
    case Rule::kCapacityLinehaul: return "CAPACITY_LINEHAUL";
    case Rule::kCapacityBackhaul: return "CAPACITY_BACKHAUL";
    case Rule::kTimeWindow: return "TIME_WINDOW";
    case Rule::kDurationLimit: return "DURATION_LIMIT";
    case Rule::kBackhaulPrecedence: return "BACKHAUL_PRECEDENCE";
    case Rule::kWrongDepotReturn: return "WRONG_DEPOT_RETURN";
  }
  return "UNKNOWN";
}

bool Verdict::has(Rule rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [rule](const Violation& v) { return v.rule == rule; });
}

Verdict check(const Instance& instance, const std::vector<Route>& routes) {
  const int m = instance.num_depots();
  for (const auto& r : routes) {
    if (!instance.is_depot(r.depot) || !instance.is_depot(r.return_depot)) {
      throw MalformedSolution("route endpoints must be depots");
    }
    if (r.customers.empty()) throw MalformedSolution("empty route");
    for (int c : r.customers) {
      if (!instance.is_customer(c)) {
        throw MalformedSolution("route entry is not a customer: " + std::to_string(c));
      }
    }
  }

  Verdict verdict;
  std::vector<int> seen(static_cast<std::size_t>(instance.num_customers()), 0);
  double cost = 0.0;
  for (std::size_t r = 0; r < routes.size(); ++r) {
    for (int c : routes[r].customers) {
      if (++seen[static_cast<std::size_t>(c - m)] == 2) {
        verdict.violations.push_back({Rule::kDuplicateVisit, static_cast<int>(r), c, 2.0, 1.0});
      }
    }
    cost += simulate_route(instance, routes[r], static_cast<int>(r), verdict.violations);
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] == 0) {
      verdict.violations.push_back({Rule::kUnvisited, -1, static_cast<int>(i) + m, 0.0, 1.0});
    }
  }
  verdict.feasible = verdict.violations.empty();
  if (verdict.feasible) verdict.cost = cost;
  return verdict;
}

std::vector<Violation> route_violations(const Instance& instance, const Route& route) {
  std::vector<Violation> out;
  simulate_route(instance, route, 0, out);
  return out;
}

Verdict check(const Instance& instance, const Solution& solution) {
  return check(instance, solution.routes);
}

std::optional<std::vector<Route>> round_trip_witness(const Instance& instance) {
  std::vector<Route> routes;
  for (int c = instance.num_depots(); c < instance.num_nodes(); ++c) {
    bool placed = false;
    for (int d = 0; d < instance.num_depots() && !placed; ++d) {
      Route r{d, {c}, d};
      if (route_violations(instance, r).empty()) {
        routes.push_back(std::move(r));
        placed = true;
      }
    }
    if (!placed) return std::nullopt;
  }
  return routes;
}

std::vector<Route> canonical_routes(std::vector<Route> routes) {
  std::sort(routes.begin(), routes.end(), [](const Route& a, const Route& b) {
    if (a.customers != b.customers) return a.customers < b.customers;
    if (a.depot != b.depot) return a.depot < b.depot;
    return a.return_depot < b.return_depot;
  });
  return routes;
}

}  // namespace mtvrp
