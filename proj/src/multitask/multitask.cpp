#include "mtvrp/multitask.hpp"

#include <cmath>
#include <string>

namespace mtvrp {

std::vector<Instance> mbt_sample(std::span<const Instance> batch, const AttributeProbabilities& p,
                                 Rng& rng) {
  for (const auto& [attr, prob] : p) {
    if (!(prob >= 0.0 && prob <= 1.0)) throw std::invalid_argument("keep probability outside [0,1]");
  }
  std::vector<Instance> out;
  out.reserve(batch.size());
  for (const auto& instance : batch) {
    VariantFlags keep = VariantFlags::all();
    for (const auto& [attr, prob] : p) keep.set(attr, rng.uniform() < prob);
    // Dropping backhaul drops its mixed mode too.
    keep.mixed_backhaul = keep.mixed_backhaul && keep.backhaul;
    out.push_back(apply_flags(instance, keep));
  }
  return out;
}

std::map<VariantKey, double> per_variant_batch_mean(std::span<const double> rewards,
                                                    std::span<const VariantKey> keys) {
  if (rewards.size() != keys.size()) throw std::invalid_argument("rewards and keys differ in length");
  std::map<VariantKey, std::pair<double, std::size_t>> acc;
  for (std::size_t i = 0; i < rewards.size(); ++i) {
    auto& [sum, count] = acc[keys[i]];
    sum += rewards[i];
    ++count;
  }
  std::map<VariantKey, double> means;
  for (const auto& [key, sc] : acc) means[key] = sc.first / static_cast<double>(sc.second);
  return means;
}

std::string_view norm_mode_name(NormMode mode) {
  switch (mode) {
    case NormMode::kSubMean: return "sub_mean";
    case NormMode::kDivMean: return "div_mean";
    case NormMode::kSubEma: return "sub_ema";
    case NormMode::kDivEma: return "div_ema";
  }
  return "?";
}

std::optional<NormMode> parse_norm_mode(std::string_view name) {
  if (name == "none") return std::nullopt;
  for (auto m : {NormMode::kSubMean, NormMode::kDivMean, NormMode::kSubEma, NormMode::kDivEma}) {
    if (norm_mode_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown reward normalization: " + std::string(name));
}

NormalizerState update_normalizer(NormalizerState state, const std::map<VariantKey, double>& batch_means) {
  if (state.uses_ema() && !(state.alpha > 0.0 && state.alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  for (const auto& [key, batch_mean] : batch_means) {
    VariantStats& s = state.stats[key];
    ++s.steps;
    if (s.steps == 1) {
      s.mean = batch_mean;
    } else {
      // Incremental forms of (1 - a) m + a r and ((t - 1) m + r) / t; both
      // leave m untouched when r == m.
      const double weight = state.uses_ema() ? state.alpha : 1.0 / static_cast<double>(s.steps);
      s.mean += weight * (batch_mean - s.mean);
    }
  }
  return state;
}

std::vector<double> normalize(std::span<const double> rewards, std::span<const VariantKey> keys,
                              const NormalizerState& state) {
  if (rewards.size() != keys.size()) throw std::invalid_argument("rewards and keys differ in length");
  std::vector<double> out(rewards.size());
  for (std::size_t i = 0; i < rewards.size(); ++i) {
    const auto it = state.stats.find(keys[i]);
    if (it == state.stats.end() || it->second.steps < 1) {
      throw std::invalid_argument("no running mean for variant " + keys[i].name());
    }
    const double mean = it->second.mean;
    if (state.divides()) {
      if (mean == 0.0) throw DegenerateNormalizer("running mean is zero for " + keys[i].name());
      out[i] = rewards[i] / std::abs(mean);
    } else {
      out[i] = rewards[i] - mean;
    }
  }
  return out;
}

RewardMatrix shared_baseline_advantage(const RewardMatrix& normalized) {
  if (normalized.cols == 0 || normalized.values.size() != normalized.rows * normalized.cols) {
    throw std::invalid_argument("advantage needs a rows x cols matrix with cols >= 1");
  }
  RewardMatrix adv = normalized;
  for (std::size_t r = 0; r < adv.rows; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < adv.cols; ++c) sum += normalized.at(r, c);
    const double mean = sum / static_cast<double>(adv.cols);
    for (std::size_t c = 0; c < adv.cols; ++c) adv.at(r, c) = normalized.at(r, c) - mean;
  }
  return adv;
}

}  // namespace mtvrp
