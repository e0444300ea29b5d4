#include <gtest/gtest.h>

#include <set>

#include "mtvrp/generator.hpp"
#include "mtvrp/heuristics.hpp"
#include "mtvrp/io.hpp"
#include "mtvrp/validator.hpp"
#include "support.hpp"

using namespace mtvrp;

TEST(Greedy, CollinearClosedAndOpen) {
  InstanceData d = test::plain({{0, 0}, {0, 0.1}, {0, 0.2}});
  const Instance closed(d);
  const Solution s = greedy_construct(closed);
  EXPECT_EQ(s.actions, (std::vector<int>{0, 1, 2, 0}));
  EXPECT_NEAR(s.cost, 0.4, 1e-12);
  d.flags.open = true;
  EXPECT_NEAR(greedy_construct(Instance(d)).cost, 0.2, 1e-12);
}

TEST(Greedy, GoldenCvrp50) {
  const Instance inst = read_instance(test::test_dir() / "golden/cvrp50_seed2024.json");
  const Solution g = greedy_construct(inst);
  EXPECT_EQ(format_number(g.cost), "10.985248936169974");
  EXPECT_TRUE(check(inst, g).feasible);
}

TEST(Random, DeterministicAndFeasible) {
  GeneratorConfig c;
  c.n = 15;
  c.m = 3;
  const Instance inst = generate_instance(c, std::uint64_t{2});
  Rng a(4), b(4);
  const Solution s1 = random_rollout(inst, a);
  const Solution s2 = random_rollout(inst, b);
  EXPECT_EQ(s1.actions, s2.actions);
  EXPECT_TRUE(check(inst, s1).feasible);
}

TEST(Random, RolloutsAreEnumeratedSolutions) {
  GeneratorConfig c;
  c.n = 6;
  c.seed = 19;
  const Instance inst = apply_flags(generate_instance(c, std::uint64_t{0}), parse_variant("VRPLTW"));
  const Enumeration e = enumerate_feasible(inst);
  std::set<std::vector<std::pair<int, std::vector<int>>>> known;
  const auto key = [](const std::vector<Route>& routes) {
    std::vector<std::pair<int, std::vector<int>>> k;
    for (const auto& r : canonical_routes(routes)) k.emplace_back(r.depot, r.customers);
    return k;
  };
  for (const auto& s : e.solutions) known.insert(key(s));
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_TRUE(known.contains(key(random_rollout(inst, rng).routes)));
  }
}

TEST(LocalSearch, OptimalStartUnchanged) {
  GeneratorConfig c;
  c.n = 4;
  c.seed = 2;
  const Instance inst = apply_flags(generate_instance(c, std::uint64_t{0}), VariantFlags{});
  const Enumeration e = enumerate_feasible(inst);
  const Solution best = make_solution(inst, e.best);
  const Solution out = local_search(inst, best, SolverConfig{});
  EXPECT_EQ(out.actions, best.actions);
  EXPECT_EQ(out.cost, best.cost);
}

TEST(LocalSearch, UncrossesRoute) {
  const Instance inst(test::plain({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  const Solution crossed = make_solution(inst, std::vector<Route>{{0, {1, 2, 3}, 0}});
  const Solution out = local_search(inst, crossed, SolverConfig{});
  EXPECT_LT(out.cost, crossed.cost);
  EXPECT_NEAR(out.cost, 4.0, 1e-12);
}

TEST(LocalSearch, NeverWorseGolden) {
  const Instance inst = read_instance(test::test_dir() / "golden/cvrp50_seed2024.json");
  SolverConfig cfg;
  cfg.method = SolverMethod::kGreedyLocalSearch;
  const Solution s = solve(inst, cfg);
  EXPECT_EQ(format_number(s.cost), "10.562256735608942");
  EXPECT_TRUE(check(inst, s).feasible);
}

TEST(LocalSearch, ZeroIterationsReturnsStart) {
  const Instance inst = read_instance(test::test_dir() / "golden/cvrp50_seed2024.json");
  SolverConfig cfg;
  cfg.ls_max_iters = 0;
  const Solution g = greedy_construct(inst);
  EXPECT_EQ(local_search(inst, g, cfg).actions, g.actions);
  cfg.ls_max_iters = -1;
  EXPECT_THROW(local_search(inst, g, cfg), std::invalid_argument);
}

TEST(LocalSearch, InfeasibleStartRejected) {
  const Instance inst(test::plain({{0, 0}, {0.1, 0}, {0.2, 0}}, {0, 0.6, 0.6}));
  const Solution bad = make_solution(inst, std::vector<Route>{{0, {1, 2}, 0}});
  EXPECT_THROW(local_search(inst, bad, SolverConfig{}), InfeasibleStart);
}

TEST(Methods, Names) {
  for (auto m : {SolverMethod::kGreedy, SolverMethod::kRandom, SolverMethod::kGreedyLocalSearch}) {
    EXPECT_EQ(parse_method(method_name(m)), m);
  }
  EXPECT_THROW(parse_method("tabu"), std::invalid_argument);
}
