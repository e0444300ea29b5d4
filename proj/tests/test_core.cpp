#include <gtest/gtest.h>

#include <set>

#include "mtvrp/dihedral.hpp"
#include "mtvrp/generator.hpp"
#include "mtvrp/instance.hpp"
#include "mtvrp/rng.hpp"
#include "mtvrp/solution.hpp"
#include "mtvrp/variant.hpp"
#include "support.hpp"

using namespace mtvrp;

TEST(Variant, CanonicalNames) {
  EXPECT_EQ(canonical_name({}), "CVRP");
  VariantFlags otw;
  otw.open = true;
  otw.time_windows = true;
  EXPECT_EQ(canonical_name(otw), "OVRPTW");
  EXPECT_EQ(canonical_name(VariantFlags::all()), "MDOVRPMBLTW");
  VariantFlags bl;
  bl.backhaul = true;
  bl.duration_limit = true;
  EXPECT_EQ(canonical_name(bl), "VRPBL");
}

TEST(Variant, MixedWithoutBackhaulRejected) {
  VariantFlags f;
  f.mixed_backhaul = true;
  EXPECT_FALSE(f.valid());
  EXPECT_THROW(canonical_name(f), InvalidFlags);
}

TEST(Variant, ParseRoundTripsEveryVariant) {
  std::set<std::string> names;
  for (int k = 0; k < kNumVariants; ++k) {
    const VariantKey key(k);
    EXPECT_EQ(key.value(), k);
    EXPECT_EQ(VariantKey(key.flags()), key);
    EXPECT_EQ(parse_variant(key.name()), key.flags());
    names.insert(key.name());
  }
  EXPECT_EQ(names.size(), 48u);
  EXPECT_EQ(VariantKey(0).name(), "CVRP");
  EXPECT_EQ(VariantKey(47).name(), "MDOVRPMBLTW");
  EXPECT_THROW(parse_variant("VRPX"), InvalidFlags);
}

TEST(Variant, AttributeCodes) {
  for (auto a : kAllAttributes) EXPECT_EQ(parse_attribute(attribute_code(a)), a);
}

namespace {

Instance full_instance(int m = 3, std::uint64_t seed = 5) {
  GeneratorConfig c;
  c.n = 12;
  c.m = m;
  c.seed = seed;
  c.backhaul_class = BackhaulClass::kMixed;
  return generate_instance(c, std::uint64_t{0});
}

}  // namespace

TEST(ApplyFlags, AllOffNeutralizesEverything) {
  const Instance full = full_instance();
  const Instance cvrp = apply_flags(full, VariantFlags{});
  EXPECT_EQ(cvrp.num_depots(), 1);
  EXPECT_EQ(cvrp.num_customers(), full.num_customers());
  EXPECT_EQ(cvrp.distance_limit(), kUnbounded);
  for (int i = 0; i < cvrp.num_nodes(); ++i) {
    EXPECT_EQ(cvrp.backhaul(i), 0.0);
    EXPECT_EQ(cvrp.tw_end(i), kUnbounded);
    EXPECT_EQ(cvrp.service(i), 0.0);
  }
  EXPECT_EQ(cvrp.variant_name(), "CVRP");
  EXPECT_EQ(cvrp.coord(0), full.coord(0));
  EXPECT_EQ(cvrp.coord(1), full.coord(3));
}

TEST(ApplyFlags, AllOnIsIdentity) {
  const Instance full = full_instance();
  EXPECT_EQ(apply_flags(full, VariantFlags::all()), full);
}

TEST(ApplyFlags, BackhaulOffMovesDemandToLinehaul) {
  InstanceData d = test::plain({{0, 0}, {0.1, 0.1}, {0.2, 0.2}}, {0, 0.3, 0});
  d.flags.backhaul = true;
  d.backhaul[2] = 0.1;
  const Instance full(d);
  const Instance cvrp = apply_flags(full, VariantFlags{});
  EXPECT_EQ(cvrp.linehaul(2), 0.1);
  EXPECT_EQ(cvrp.backhaul(2), 0.0);
  EXPECT_EQ(cvrp.linehaul(1), 0.3);
}

TEST(ApplyFlags, Idempotent) {
  const Instance full = full_instance();
  for (const auto& f : all_variants()) {
    const Instance once = apply_flags(full, f);
    EXPECT_EQ(apply_flags(once, f), once) << canonical_name(f);
    EXPECT_EQ(once.flags(), f) << canonical_name(f);
  }
}

TEST(ApplyFlags, PreservesDemandMass) {
  const Instance full = full_instance();
  double mass = 0.0;
  for (int i = 0; i < full.num_nodes(); ++i) mass += full.linehaul(i) + full.backhaul(i);
  for (const auto& f : all_variants()) {
    const Instance v = apply_flags(full, f);
    double got = 0.0;
    for (int i = 0; i < v.num_nodes(); ++i) got += v.linehaul(i) + v.backhaul(i);
    EXPECT_NEAR(got, mass, 1e-12) << canonical_name(f);
  }
}

TEST(ApplyFlags, CannotSwitchAttributesOn) {
  const Instance cvrp = apply_flags(full_instance(), VariantFlags{});
  EXPECT_EQ(apply_flags(cvrp, VariantFlags::all()), cvrp);
}

TEST(Instance, RejectsInvertedWindow) {
  InstanceData d = test::plain({{0, 0}, {0.1, 0}});
  test::with_time_windows(d, 4.6, {1.0}, {0.5}, {0.1});
  EXPECT_THROW(Instance{d}, InvalidInstance);
}

TEST(Instance, RejectsBackhaulWithoutFlag) {
  InstanceData d = test::plain({{0, 0}, {0.1, 0}});
  d.backhaul[1] = 0.2;
  EXPECT_THROW(Instance{d}, InvalidInstance);
}

TEST(Instance, RejectsSeveralDepotsWithoutFlag) {
  InstanceData d = test::plain({{0, 0}, {1, 1}, {0.1, 0}});
  d.num_depots = 2;
  d.num_customers = 1;
  d.linehaul[1] = 0.0;
  EXPECT_THROW(Instance{d}, InvalidInstance);
  d.flags.multi_depot = true;
  EXPECT_NO_THROW(Instance{d});
}

TEST(Instance, RejectsShortDistanceLimit) {
  InstanceData d = test::plain({{0, 0}, {0.5, 0}});
  d.flags.duration_limit = true;
  d.distance_limit = 0.9;
  EXPECT_THROW(Instance{d}, InvalidInstance);
  d.distance_limit = 1.1;
  EXPECT_NO_THROW(Instance{d});
}

TEST(Dihedral, QuarterTurn) {
  EXPECT_EQ(dihedral_transform(Point{0.2, 0.7}, 0), (Point{0.2, 0.7}));
  const Point p = dihedral_transform(Point{0.2, 0.7}, 1);
  EXPECT_DOUBLE_EQ(p.x, 0.7);
  EXPECT_DOUBLE_EQ(p.y, 0.8);
  EXPECT_THROW(dihedral_transform(Point{}, 8), std::out_of_range);
  EXPECT_THROW(dihedral_transform(Point{}, -1), std::out_of_range);
}

TEST(Dihedral, EightDistinctIsometries) {
  Rng rng(3);
  std::vector<Point> pts(20);
  for (auto& p : pts) p = {rng.uniform(), rng.uniform()};
  std::set<std::pair<double, double>> images;
  for (int k = 0; k < kNumDihedral; ++k) {
    const auto out = dihedral_transform(pts, k);
    images.insert({out[0].x, out[0].y});
    for (std::size_t i = 0; i < pts.size(); ++i) {
      EXPECT_GE(out[i].x, 0.0);
      EXPECT_LE(out[i].x, 1.0);
      for (std::size_t j = 0; j < pts.size(); ++j) {
        EXPECT_NEAR(euclidean(out[i], out[j]), euclidean(pts[i], pts[j]), 1e-12);
      }
    }
  }
  EXPECT_EQ(images.size(), 8u);
}

TEST(Solution, CostsOfCollinearRoute) {
  InstanceData d = test::plain({{0, 0}, {0, 0.1}, {0, 0.2}});
  const Instance closed(d);
  d.flags.open = true;
  const Instance open(d);
  const std::vector<int> actions = {0, 1, 2, 0};
  EXPECT_NEAR(make_solution(closed, actions).cost, 0.4, 1e-12);
  EXPECT_NEAR(make_solution(open, actions).cost, 0.2, 1e-12);
  EXPECT_NEAR(actions_cost(closed, actions), 0.4, 1e-12);
}

TEST(Solution, RoutesAndActionsAgree) {
  InstanceData d = test::plain({{0, 0}, {1, 1}, {0.3, 0.1}, {0.6, 0.9}, {0.2, 0.8}});
  d.num_depots = 2;
  d.num_customers = 3;
  d.linehaul[1] = 0.0;
  d.flags.multi_depot = true;
  const Instance inst(d);
  const std::vector<int> actions = {0, 2, 0, 1, 3, 4, 1};
  const Solution s = make_solution(inst, actions);
  ASSERT_EQ(s.routes.size(), 2u);
  EXPECT_EQ(s.routes[0], (Route{0, {2}, 0}));
  EXPECT_EQ(s.routes[1], (Route{1, {3, 4}, 1}));
  EXPECT_EQ(actions_from_routes(s.routes), actions);
  EXPECT_NEAR(routes_cost(inst, s.routes), actions_cost(inst, actions), 1e-9);
  EXPECT_THROW(make_solution(inst, std::vector<int>{0, 2, 9, 0}), MalformedSolution);
}

TEST(Rng, ReproducibleAndSplittable) {
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng s1 = Rng(99).split(1), s1b = Rng(99).split(1), s2 = Rng(99).split(2);
  const auto v = s1.next();
  EXPECT_EQ(v, s1b.next());
  EXPECT_NE(v, s2.next());
  Rng r(7);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const auto k = r.integer(1, 9);
    EXPECT_GE(k, 1);
    EXPECT_LE(k, 9);
  }
}
