#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mtvrp/instance.hpp"
#include "mtvrp/rng.hpp"
#include "mtvrp/variant.hpp"

namespace mtvrp {

// Keep probability per attribute. Attributes missing from the map are kept.
using AttributeProbabilities = std::map<Attribute, double>;

// Mixed batch sampling: for every instance and every attribute in the map
// (in Attribute order), keep the attribute iff a uniform draw is below its
// probability, then neutralize the dropped ones with apply_flags.
std::vector<Instance> mbt_sample(std::span<const Instance> batch, const AttributeProbabilities& p,
                                 Rng& rng);

// Mean reward per variant present in the batch.
std::map<VariantKey, double> per_variant_batch_mean(std::span<const double> rewards,
                                                    std::span<const VariantKey> keys);

enum class NormMode { kSubMean, kDivMean, kSubEma, kDivEma };

std::string_view norm_mode_name(NormMode mode);
std::optional<NormMode> parse_norm_mode(std::string_view name);  // nullopt for "none"

class DegenerateNormalizer : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct VariantStats {
  double mean = 0.0;
  long steps = 0;
  friend bool operator==(const VariantStats&, const VariantStats&) = default;
};

struct NormalizerState {
  NormMode mode = NormMode::kDivEma;
  double alpha = 0.25;
  std::map<VariantKey, VariantStats> stats;

  bool uses_ema() const { return mode == NormMode::kSubEma || mode == NormMode::kDivEma; }
  bool divides() const { return mode == NormMode::kDivMean || mode == NormMode::kDivEma; }

  friend bool operator==(const NormalizerState&, const NormalizerState&) = default;
};

// Advances the running mean of every variant present in `batch_means`;
// absent variants keep their state and step count.
NormalizerState update_normalizer(NormalizerState state, const std::map<VariantKey, double>& batch_means);

// r - mean (subtraction modes) or r / |mean| (division modes), per reward.
std::vector<double> normalize(std::span<const double> rewards, std::span<const VariantKey> keys,
                              const NormalizerState& state);

// Row-major rows x cols matrix of rewards: one row per instance, one column
// per multistart rollout.
struct RewardMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

// Subtracts each row's mean (the shared multistart baseline).
RewardMatrix shared_baseline_advantage(const RewardMatrix& normalized);

}  // namespace mtvrp
