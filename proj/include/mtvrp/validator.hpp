#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mtvrp/instance.hpp"
#include "mtvrp/solution.hpp"

namespace mtvrp {

enum class Rule {
  kDuplicateVisit,
  kUnvisited,
  kCapacityLinehaul,
  kCapacityBackhaul,
  kTimeWindow,
  kDurationLimit,
  kBackhaulPrecedence,
  kWrongDepotReturn,
};

std::string_view rule_code(Rule rule);

struct Violation {
  Rule rule;
  int route = -1;  // -1 when not tied to one route
  int node = -1;
  double measured = 0.0;
  double bound = 0.0;
};

struct Verdict {
  bool feasible = false;
  std::vector<Violation> violations;
  std::optional<double> cost;

  bool has(Rule rule) const;
};

// Re-simulates every route of `solution.routes` from scratch and reports all
// violations. Throws MalformedSolution for out-of-range or misplaced indices
// and for empty routes.
Verdict check(const Instance& instance, const Solution& solution);
Verdict check(const Instance& instance, const std::vector<Route>& routes);

// Violations of one route in isolation (coverage not considered).
std::vector<Violation> route_violations(const Instance& instance, const Route& route);

// One single-customer route per customer, from the first depot that can
// serve it alone. std::nullopt if some customer has no such depot.
std::optional<std::vector<Route>> round_trip_witness(const Instance& instance);

class SizeGuard : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxEnumerationCustomers = 8;

struct Enumeration {
  // Every feasible solution as a canonical route list (routes sorted).
  std::vector<std::vector<Route>> solutions;
  double optimum = kUnbounded;
  std::vector<Route> best;
};

using FeasibleVisitor = std::function<void(const std::vector<Route>&, double cost)>;

// Streams every feasible solution (each set of routes once) to `visit`.
// Throws SizeGuard for n > 8.
void for_each_feasible(const Instance& instance, const FeasibleVisitor& visit);

// Exhaustive search over route partitions, orders and depot assignments.
// Throws SizeGuard for n > 8.
Enumeration enumerate_feasible(const Instance& instance);

// Sorted copy; two solutions are the same iff their canonical forms match.
std::vector<Route> canonical_routes(std::vector<Route> routes);

}  // namespace mtvrp
