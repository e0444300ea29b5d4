#include <gtest/gtest.h>

#include <numeric>

#include "mtvrp/generator.hpp"
#include "mtvrp/multitask.hpp"

using namespace mtvrp;

namespace {

std::vector<Instance> batch(int size) {
  GeneratorConfig c;
  c.n = 8;
  c.m = 3;
  c.seed = 31;
  c.backhaul_class = BackhaulClass::kMixed;
  std::vector<Instance> out;
  for (int i = 0; i < size; ++i) out.push_back(generate_instance(c, static_cast<std::uint64_t>(i)));
  return out;
}

NormalizerState feed(NormMode mode, const std::vector<double>& means) {
  NormalizerState s;
  s.mode = mode;
  s.alpha = 0.25;
  for (double r : means) s = update_normalizer(std::move(s), {{VariantKey(0), r}});
  return s;
}

}  // namespace

TEST(Mbt, KeepAllLeavesBatchUnchanged) {
  const auto b = batch(4);
  Rng rng(1);
  AttributeProbabilities p;
  for (auto a : kAllAttributes) p[a] = 1.0;
  const auto out = mbt_sample(b, p, rng);
  ASSERT_EQ(out.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(out[i], b[i]);
}

TEST(Mbt, DropAllGivesCvrp) {
  const auto b = batch(4);
  Rng rng(1);
  AttributeProbabilities p;
  for (auto a : kAllAttributes) p[a] = 0.0;
  for (const auto& inst : mbt_sample(b, p, rng)) EXPECT_EQ(inst.variant_name(), "CVRP");
}

TEST(Mbt, DroppingBackhaulDropsMixed) {
  const auto b = batch(20);
  Rng rng(5);
  const AttributeProbabilities p = {{Attribute::kBackhaul, 0.5}};
  for (const auto& inst : mbt_sample(b, p, rng)) {
    EXPECT_TRUE(inst.flags().valid());
    if (!inst.flags().backhaul) EXPECT_FALSE(inst.flags().mixed_backhaul);
  }
}

TEST(Mbt, RejectsBadProbability) {
  const auto b = batch(1);
  Rng rng(1);
  EXPECT_THROW(mbt_sample(b, {{Attribute::kOpen, 1.5}}, rng), std::invalid_argument);
}

TEST(BatchMean, PerVariant) {
  const std::vector<double> r = {-10, -20, -30};
  const std::vector<VariantKey> k = {VariantKey(0), VariantKey(0), VariantKey(1)};
  const auto m = per_variant_batch_mean(r, k);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.at(VariantKey(0)), -15.0);
  EXPECT_EQ(m.at(VariantKey(1)), -30.0);
  const std::vector<double> one = {-7.5};
  const std::vector<VariantKey> k1 = {VariantKey(3)};
  EXPECT_EQ(per_variant_batch_mean(one, k1).at(VariantKey(3)), -7.5);
}

TEST(BatchMean, WeightedRecombinationIsGlobalMean) {
  Rng rng(9);
  std::vector<double> r(500);
  std::vector<VariantKey> k;
  for (auto& x : r) x = -rng.uniform(1, 30);
  for (std::size_t i = 0; i < r.size(); ++i) k.emplace_back(static_cast<int>(rng.integer(0, 47)));
  const auto means = per_variant_batch_mean(r, k);
  double total = 0.0;
  for (const auto& [key, mean] : means) total += mean * static_cast<double>(std::count(k.begin(), k.end(), key));
  EXPECT_NEAR(total / 500.0, std::accumulate(r.begin(), r.end(), 0.0) / 500.0, 1e-12);
}

TEST(Normalizer, EmaSequence) {
  NormalizerState s;
  s.mode = NormMode::kDivEma;
  s.alpha = 0.25;
  const double expected[] = {-10.0, -12.5, -12.875};
  const double inputs[] = {-10.0, -20.0, -14.0};
  for (int t = 0; t < 3; ++t) {
    s = update_normalizer(std::move(s), {{VariantKey(0), inputs[t]}});
    EXPECT_NEAR(s.stats.at(VariantKey(0)).mean, expected[t], 1e-12);
  }
}

TEST(Normalizer, SimpleMean) {
  EXPECT_NEAR(feed(NormMode::kSubMean, {-10, -20}).stats.at(VariantKey(0)).mean, -15.0, 1e-12);
}

TEST(Normalizer, ConstantInputIsFixedPoint) {
  for (auto mode : {NormMode::kSubMean, NormMode::kDivEma}) {
    const auto s = feed(mode, std::vector<double>(100, -7.3));
    EXPECT_EQ(s.stats.at(VariantKey(0)).mean, -7.3);
    EXPECT_EQ(s.stats.at(VariantKey(0)).steps, 100);
  }
}

TEST(Normalizer, AbsentVariantsKeepTheirState) {
  NormalizerState s;
  s.mode = NormMode::kSubMean;
  s = update_normalizer(std::move(s), {{VariantKey(0), -10}, {VariantKey(5), -4}});
  s = update_normalizer(std::move(s), {{VariantKey(0), -20}});
  EXPECT_EQ(s.stats.at(VariantKey(5)), (VariantStats{-4.0, 1}));
  // The first step of a late variant is its own batch mean.
  s = update_normalizer(std::move(s), {{VariantKey(9), -2}});
  EXPECT_EQ(s.stats.at(VariantKey(9)), (VariantStats{-2.0, 1}));
  EXPECT_EQ(s.stats.at(VariantKey(0)).steps, 2);
}

TEST(Normalizer, DivideAndSubtract) {
  const std::vector<double> r = {-20.0};
  const std::vector<VariantKey> k = {VariantKey(0)};
  auto s = feed(NormMode::kDivEma, {-10, -20});
  EXPECT_NEAR(normalize(r, k, s)[0], -1.6, 1e-12);
  s.mode = NormMode::kSubEma;
  EXPECT_NEAR(normalize(r, k, s)[0], -7.5, 1e-12);
  const std::vector<double> same = {-12.5};
  EXPECT_EQ(normalize(same, k, s)[0], 0.0);
}

TEST(Normalizer, Errors) {
  const std::vector<double> r = {-1.0};
  const std::vector<VariantKey> k = {VariantKey(0)};
  EXPECT_THROW(normalize(r, k, feed(NormMode::kDivMean, {0.0})), DegenerateNormalizer);
  EXPECT_THROW(normalize(r, k, NormalizerState{}), std::invalid_argument);
  NormalizerState bad;
  bad.alpha = 1.0;
  EXPECT_THROW(update_normalizer(bad, {{VariantKey(0), -1}}), std::invalid_argument);
  EXPECT_EQ(parse_norm_mode("none"), std::nullopt);
  EXPECT_EQ(parse_norm_mode("div_ema"), NormMode::kDivEma);
  EXPECT_THROW(parse_norm_mode("ema"), std::invalid_argument);
}

TEST(Advantage, RowMeanRemoved) {
  RewardMatrix m{2, 3, {-3, -1, -2, 4, 4, 4}};
  const auto a = shared_baseline_advantage(m);
  EXPECT_EQ(a.values, (std::vector<double>{-1, 1, 0, 0, 0, 0}));
  EXPECT_THROW(shared_baseline_advantage(RewardMatrix{1, 0, {}}), std::invalid_argument);
}
