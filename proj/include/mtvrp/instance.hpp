#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtvrp/variant.hpp"

namespace mtvrp {

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

enum class BackhaulClass : std::uint8_t { kTraditional = 1, kMixed = 2 };

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

class InvalidInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raw attribute arrays. Node arrays have m + n entries, depots first.
struct InstanceData {
  int num_depots = 1;
  int num_customers = 0;
  std::vector<Point> coords;
  double capacity = 1.0;
  std::vector<double> linehaul;  // demand / capacity
  std::vector<double> backhaul;  // demand / capacity
  std::vector<double> tw_start;
  std::vector<double> tw_end;
  std::vector<double> service;
  double distance_limit = kUnbounded;
  double t_max = kUnbounded;
  VariantFlags flags;
  BackhaulClass backhaul_class = BackhaulClass::kTraditional;
  // Coordinate scale relative to the original units (1 for generated data).
  double scale = 1.0;

  friend bool operator==(const InstanceData&, const InstanceData&) = default;
};

// Immutable problem description. Construction checks every invariant and
// throws InvalidInstance on the first one that fails.
class Instance {
 public:
  explicit Instance(InstanceData data);

  const InstanceData& data() const { return data_; }

  int num_depots() const { return data_.num_depots; }
  int num_customers() const { return data_.num_customers; }
  int num_nodes() const { return data_.num_depots + data_.num_customers; }
  bool is_depot(int node) const { return node >= 0 && node < data_.num_depots; }
  bool is_customer(int node) const { return node >= data_.num_depots && node < num_nodes(); }

  const VariantFlags& flags() const { return data_.flags; }
  bool open() const { return data_.flags.open; }
  bool mixed() const { return data_.backhaul_class == BackhaulClass::kMixed; }

  double distance(int from, int to) const {
    return dist_[static_cast<std::size_t>(from) * static_cast<std::size_t>(num_nodes()) +
                 static_cast<std::size_t>(to)];
  }

  const Point& coord(int node) const { return data_.coords[idx(node)]; }
  double linehaul(int node) const { return data_.linehaul[idx(node)]; }
  double backhaul(int node) const { return data_.backhaul[idx(node)]; }
  double tw_start(int node) const { return data_.tw_start[idx(node)]; }
  double tw_end(int node) const { return data_.tw_end[idx(node)]; }
  double service(int node) const { return data_.service[idx(node)]; }
  double distance_limit() const { return data_.distance_limit; }
  double t_max() const { return data_.t_max; }
  double capacity() const { return data_.capacity; }
  double scale() const { return data_.scale; }

  std::string variant_name() const { return canonical_name(data_.flags); }

  friend bool operator==(const Instance& a, const Instance& b) { return a.data_ == b.data_; }

 private:
  static std::size_t idx(int node) { return static_cast<std::size_t>(node); }

  InstanceData data_;
  std::vector<double> dist_;
};

double euclidean(const Point& a, const Point& b);

// Invariant violations as readable messages; empty when the data is valid.
std::vector<std::string> invariant_violations(const InstanceData& data);

// Neutralizes the attributes that are off in `flags` (or already off in
// `full`). Attributes can only be switched off, never on.
Instance apply_flags(const Instance& full, const VariantFlags& flags);

}  // namespace mtvrp
