#include "mtvrp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mtvrp {

GeneratorConfig GeneratorConfig::multi_depot(int n, std::uint64_t seed) {
  GeneratorConfig c;
  c.n = n;
  c.m = 3;
  c.seed = seed;
  return c;
}

double capacity_for(int n) {
  if (n < 1) throw std::domain_error("capacity_for needs n >= 1");
  if (n <= 20) return 30.0;
  if (n <= 1000) return 30.0 + std::floor(n / 5.0);
  return 30.0 + std::floor(1000.0 / 5.0 + (n - 1000) / 33.3);
}

Demands sample_demands(int n, Rng& rng, double backhaul_probability) {
  Demands d;
  d.linehaul.resize(static_cast<std::size_t>(n));
  d.backhaul.resize(static_cast<std::size_t>(n));
  for (auto& q : d.linehaul) q = static_cast<int>(rng.integer(1, 9));
  for (auto& p : d.backhaul) p = static_cast<int>(rng.integer(1, 9));
  for (std::size_t i = 0; i < d.linehaul.size(); ++i) {
    if (rng.bernoulli(backhaul_probability)) {
      d.linehaul[i] = 0;
    } else {
      d.backhaul[i] = 0;
    }
  }
  return d;
}

TimeWindows sample_time_windows(std::span<const Point> coords, int m, double t_max, Rng& rng,
                                Range service, Range tw_length) {
  if (!std::isfinite(t_max)) throw InfeasibleConfig("time windows need a finite t_max");
  const auto depots = static_cast<std::size_t>(m);
  const std::size_t n = coords.size() - depots;
  TimeWindows tw;
  tw.service.resize(n);
  tw.start.resize(n);
  tw.end.resize(n);
  std::vector<double> length(n);
  std::vector<double> u(n);
  for (auto& s : tw.service) s = rng.uniform(service.lo, service.hi);
  for (auto& t : length) t = rng.uniform(tw_length.lo, tw_length.hi);
  for (auto& x : u) x = rng.uniform();

  for (std::size_t i = 0; i < n; ++i) {
    double d_max = 0.0;
    for (std::size_t j = 0; j < depots; ++j) {
      d_max = std::max(d_max, euclidean(coords[depots + i], coords[j]));
    }
    // A customer sitting on every depot has no travel component to scale.
    const double upper = d_max > 0.0 ? (t_max - tw.service[i] - length[i]) / d_max - 1.0 : 1.0;
    if (upper < 1.0) {
      throw InfeasibleConfig("t_max too small for customer " + std::to_string(i));
    }
    tw.start[i] = (1.0 + (upper - 1.0) * u[i]) * d_max;
    tw.end[i] = tw.start[i] + length[i];
  }
  return tw;
}

double sample_distance_limit(std::span<const Point> coords, int m, double l_max, Rng& rng) {
  // Depot 0 sets the bound even with several depots, so the limit stays
  // valid when the instance is reduced to its first depot.
  double far = 0.0;
  for (auto i = static_cast<std::size_t>(m); i < coords.size(); ++i) {
    far = std::max(far, euclidean(coords[0], coords[i]));
  }
  const double lower = 2.0 * far;
  if (lower >= l_max) throw InfeasibleGeometry("round trip bound exceeds l_max");
  return rng.uniform(lower, l_max);
}

Instance generate_instance(const GeneratorConfig& config, Rng& rng) {
  if (config.n < 1 || config.m < 1) throw std::invalid_argument("generator needs n >= 1 and m >= 1");
  if (!(config.l_max > 0.0) || config.service.lo > config.service.hi || config.service.lo < 0.0 ||
      config.tw_length.lo > config.tw_length.hi || config.tw_length.lo < 0.0) {
    throw std::invalid_argument("invalid generator ranges");
  }
  const auto m = static_cast<std::size_t>(config.m);
  const auto n = static_cast<std::size_t>(config.n);
  const double capacity = capacity_for(config.n);

  for (int attempt = 0;; ++attempt) {
    try {
      InstanceData d;
      d.num_depots = config.m;
      d.num_customers = config.n;
      d.capacity = capacity;
      d.coords.resize(m + n);
      for (auto& p : d.coords) {
        p.x = rng.uniform();
        p.y = rng.uniform();
      }

      const Demands demands = sample_demands(config.n, rng, config.backhaul_probability);
      d.linehaul.assign(m, 0.0);
      d.backhaul.assign(m, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        d.linehaul.push_back(demands.linehaul[i] / capacity);
        d.backhaul.push_back(demands.backhaul[i] / capacity);
      }

      const bool sampled_mixed = rng.uniform() < 0.5;
      d.backhaul_class = config.backhaul_class.value_or(sampled_mixed ? BackhaulClass::kMixed
                                                                      : BackhaulClass::kTraditional);

      const TimeWindows tw = sample_time_windows(d.coords, config.m, config.t_max, rng, config.service,
                                                 config.tw_length);
      d.t_max = config.t_max;
      d.tw_start.assign(m, 0.0);
      d.tw_end.assign(m, config.t_max);
      d.service.assign(m, 0.0);
      d.tw_start.insert(d.tw_start.end(), tw.start.begin(), tw.start.end());
      d.tw_end.insert(d.tw_end.end(), tw.end.begin(), tw.end.end());
      d.service.insert(d.service.end(), tw.service.begin(), tw.service.end());

      d.distance_limit = sample_distance_limit(d.coords, config.m, config.l_max, rng);

      d.flags = VariantFlags::all();
      d.flags.multi_depot = config.m > 1;
      d.flags.mixed_backhaul = d.backhaul_class == BackhaulClass::kMixed;
      return Instance(std::move(d));
    } catch (const InfeasibleGeometry&) {
      if (attempt + 1 >= config.max_retries) throw;
    } catch (const InfeasibleConfig&) {
      if (attempt + 1 >= config.max_retries) throw;
    }
  }
}

Instance generate_instance(const GeneratorConfig& config, std::uint64_t index) {
  Rng rng = Rng(config.seed).split(index);
  return generate_instance(config, rng);
}

}  // namespace mtvrp
