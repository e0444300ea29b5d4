#pragma once

#include <filesystem>
#include <vector>

#include "mtvrp/instance.hpp"

namespace mtvrp::test {

inline std::filesystem::path test_dir() { return MTVRP_TEST_DIR; }

// Single-depot CVRP data with the given node coordinates (depot first) and
// linehaul demands; every other attribute neutral.
inline InstanceData plain(std::vector<Point> coords, std::vector<double> linehaul = {}) {
  InstanceData d;
  const auto nodes = coords.size();
  d.num_depots = 1;
  d.num_customers = static_cast<int>(nodes) - 1;
  d.coords = std::move(coords);
  d.linehaul = linehaul.empty() ? std::vector<double>(nodes, 0.1) : std::move(linehaul);
  d.linehaul[0] = 0.0;
  d.backhaul.assign(nodes, 0.0);
  d.tw_start.assign(nodes, 0.0);
  d.tw_end.assign(nodes, kUnbounded);
  d.service.assign(nodes, 0.0);
  return d;
}

// Turns on time windows with t_max as horizon; customers get [e, l], s.
inline void with_time_windows(InstanceData& d, double t_max, const std::vector<double>& e,
                              const std::vector<double>& l, const std::vector<double>& s) {
  d.flags.time_windows = true;
  d.t_max = t_max;
  for (int j = 0; j < d.num_depots; ++j) d.tw_end[static_cast<std::size_t>(j)] = t_max;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto node = static_cast<std::size_t>(d.num_depots) + i;
    d.tw_start[node] = e[i];
    d.tw_end[node] = l[i];
    d.service[node] = s[i];
  }
}

}  // namespace mtvrp::test
