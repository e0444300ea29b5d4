#include <bit>
#include <functional>

#include "mtvrp/validator.hpp"

namespace mtvrp {

namespace {

// Routes are generated anchor-first: the next route always contains the
// lowest-numbered customer still unassigned, which yields every set of
// routes exactly once. Prefix pruning is exact because each per-node check
// depends only on the nodes before it.
class Enumerator {
 public:
  Enumerator(const Instance& instance, const FeasibleVisitor& visit) : inst_(instance), visit_(visit) {}

  void run() {
    const int n = inst_.num_customers();
    remaining_ = (1u << n) - 1u;
    next_route();
  }

 private:
  int customer(int bit) const { return inst_.num_depots() + bit; }

  void next_route() {
    if (remaining_ == 0) {
      const Verdict verdict = check(inst_, routes_);
      if (verdict.feasible) visit_(routes_, *verdict.cost);
      return;
    }
    const int anchor = customer(std::countr_zero(remaining_));
    for (int d = 0; d < inst_.num_depots(); ++d) {
      routes_.push_back(Route{d, {}, d});
      extend(routes_.size() - 1, anchor, false);
      routes_.pop_back();
    }
  }

  void extend(std::size_t idx, int anchor, bool has_anchor) {
    for (int bit = 0; bit < inst_.num_customers(); ++bit) {
      const unsigned mask = 1u << bit;
      if (!(remaining_ & mask)) continue;
      const int node = customer(bit);
      routes_[idx].customers.push_back(node);
      if (route_violations(inst_, routes_[idx]).empty()) {
        remaining_ &= ~mask;
        const bool with_anchor = has_anchor || node == anchor;
        if (with_anchor) next_route();
        extend(idx, anchor, with_anchor);
        remaining_ |= mask;
      }
      routes_[idx].customers.pop_back();
    }
  }

  const Instance& inst_;
  const FeasibleVisitor& visit_;
  unsigned remaining_ = 0;
  std::vector<Route> routes_;
};

}  // namespace

void for_each_feasible(const Instance& instance, const FeasibleVisitor& visit) {
  if (instance.num_customers() > kMaxEnumerationCustomers) {
    throw SizeGuard("enumeration limited to 8 customers");
  }
  Enumerator(instance, visit).run();
}

Enumeration enumerate_feasible(const Instance& instance) {
  Enumeration result;
  for_each_feasible(instance, [&](const std::vector<Route>& routes, double cost) {
    result.solutions.push_back(canonical_routes(routes));
    if (cost < result.optimum) {
      result.optimum = cost;
      result.best = routes;
    }
  });
  return result;
}

}  // namespace mtvrp
