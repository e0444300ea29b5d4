#include "mtvrp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mtvrp {

namespace {

constexpr double kTol = 1e-9;

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

bool in_unit(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

}  // namespace

double euclidean(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

std::vector<std::string> invariant_violations(const InstanceData& d) {
  std::vector<std::string> out;
  if (d.num_depots < 1) out.push_back("num_depots must be >= 1");
  if (d.num_customers < 1) out.push_back("num_customers must be >= 1");
  if (!out.empty()) return out;

  const auto nodes = static_cast<std::size_t>(d.num_depots + d.num_customers);
  for (const auto* v : {&d.linehaul, &d.backhaul, &d.tw_start, &d.tw_end, &d.service}) {
    if (v->size() != nodes) out.push_back("node attribute array has wrong length");
  }
  if (d.coords.size() != nodes) out.push_back("coords has wrong length");
  if (!out.empty()) return out;

  if (!d.flags.valid()) out.push_back("mixed_backhaul set without backhaul");
  if (!d.flags.multi_depot && d.num_depots != 1) out.push_back("multiple depots without MD flag");
  if ((d.backhaul_class == BackhaulClass::kMixed) != d.flags.mixed_backhaul) {
    out.push_back("backhaul_class disagrees with mixed_backhaul flag");
  }
  if (!(std::isfinite(d.capacity) && d.capacity > 0.0)) out.push_back("capacity must be positive");
  if (!(d.distance_limit > 0.0)) out.push_back("distance_limit must be positive");
  if (!(d.t_max > 0.0)) out.push_back("t_max must be positive");
  if (!(std::isfinite(d.scale) && d.scale > 0.0)) out.push_back("scale must be positive");

  for (std::size_t i = 0; i < nodes; ++i) {
    if (!in_unit(d.coords[i].x) || !in_unit(d.coords[i].y)) {
      out.push_back(cat("node ", i, ": coordinate outside [0,1]"));
    }
    if (!in_unit(d.linehaul[i]) || !in_unit(d.backhaul[i])) {
      out.push_back(cat("node ", i, ": demand outside [0,1]"));
    }
    if (std::isnan(d.tw_start[i]) || std::isnan(d.tw_end[i]) || !std::isfinite(d.service[i]) ||
        !std::isfinite(d.tw_start[i]) || d.tw_start[i] < 0.0 || d.service[i] < 0.0) {
      out.push_back(cat("node ", i, ": invalid time attributes"));
    } else if (d.tw_start[i] > d.tw_end[i]) {
      out.push_back(cat("node ", i, ": tw_start > tw_end"));
    }
  }
  if (!out.empty()) return out;

  const auto m = static_cast<std::size_t>(d.num_depots);
  for (std::size_t j = 0; j < m; ++j) {
    if (d.linehaul[j] != 0.0 || d.backhaul[j] != 0.0 || d.service[j] != 0.0 ||
        d.tw_start[j] != 0.0 || d.tw_end[j] != d.t_max) {
      out.push_back(cat("depot ", j, ": must have zero demand/service and window [0, t_max]"));
    }
  }

  for (std::size_t i = m; i < nodes; ++i) {
    const bool has_q = d.linehaul[i] > 0.0;
    const bool has_p = d.backhaul[i] > 0.0;
    if (d.flags.backhaul) {
      if (has_q == has_p) out.push_back(cat("customer ", i, ": needs exactly one of linehaul/backhaul"));
    } else if (has_p) {
      out.push_back(cat("customer ", i, ": backhaul demand without B flag"));
    }
  }

  auto farthest_depot = [&](std::size_t i) {
    double best = 0.0;
    for (std::size_t j = 0; j < m; ++j) best = std::max(best, euclidean(d.coords[i], d.coords[j]));
    return best;
  };

  if (d.flags.time_windows) {
    if (!std::isfinite(d.t_max)) out.push_back("time windows require a finite t_max");
    for (std::size_t i = m; i < nodes; ++i) {
      const double reach = farthest_depot(i);
      const double back = std::max(reach, d.tw_start[i]) + d.service[i] + reach;
      if (!(reach < d.tw_end[i] + kTol) || !(back < d.t_max + kTol)) {
        out.push_back(cat("customer ", i, ": time window not reachable from every depot"));
      }
    }
  } else {
    if (d.t_max != kUnbounded) out.push_back("t_max must be unbounded without TW");
    for (std::size_t i = 0; i < nodes; ++i) {
      if (d.tw_start[i] != 0.0 || d.tw_end[i] != kUnbounded || d.service[i] != 0.0) {
        out.push_back(cat("node ", i, ": time attributes must be neutral without TW"));
      }
    }
  }

  if (d.flags.duration_limit) {
    double bound = kUnbounded;
    for (std::size_t j = 0; j < m; ++j) {
      double far = 0.0;
      for (std::size_t i = m; i < nodes; ++i) far = std::max(far, euclidean(d.coords[i], d.coords[j]));
      bound = std::min(bound, 2.0 * far);
    }
    if (!(d.distance_limit + kTol > bound)) out.push_back("distance_limit below the round trip bound");
  } else if (d.distance_limit != kUnbounded) {
    out.push_back("distance_limit must be unbounded without L");
  }
  return out;
}

Instance::Instance(InstanceData data) : data_(std::move(data)) {
  if (auto problems = invariant_violations(data_); !problems.empty()) {
    throw InvalidInstance(problems.front());
  }
  const auto nodes = static_cast<std::size_t>(num_nodes());
  dist_.resize(nodes * nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    for (std::size_t j = 0; j < nodes; ++j) {
      dist_[i * nodes + j] = euclidean(data_.coords[i], data_.coords[j]);
    }
  }
}

Instance apply_flags(const Instance& full, const VariantFlags& requested) {
  if (!requested.valid()) throw InvalidFlags("mixed backhaul requires backhaul");
  const VariantFlags flags = full.flags() & requested;
  InstanceData d = full.data();
  d.flags = flags;

  if (!flags.multi_depot && d.num_depots > 1) {
    const auto drop = static_cast<std::ptrdiff_t>(d.num_depots - 1);
    for (auto* v : {&d.linehaul, &d.backhaul, &d.tw_start, &d.tw_end, &d.service}) {
      v->erase(v->begin() + 1, v->begin() + 1 + drop);
    }
    d.coords.erase(d.coords.begin() + 1, d.coords.begin() + 1 + drop);
    d.num_depots = 1;
  }
  if (!flags.time_windows) {
    std::fill(d.tw_start.begin(), d.tw_start.end(), 0.0);
    std::fill(d.tw_end.begin(), d.tw_end.end(), kUnbounded);
    std::fill(d.service.begin(), d.service.end(), 0.0);
    d.t_max = kUnbounded;
  }
  if (!flags.duration_limit) d.distance_limit = kUnbounded;
  if (!flags.backhaul) {
    for (std::size_t i = 0; i < d.linehaul.size(); ++i) {
      d.linehaul[i] += d.backhaul[i];
      d.backhaul[i] = 0.0;
    }
  }
  d.backhaul_class = flags.mixed_backhaul ? BackhaulClass::kMixed : BackhaulClass::kTraditional;
  return Instance(std::move(d));
}

}  // namespace mtvrp
