#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtvrp {

class InvalidFlags : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Attribute : std::uint8_t {
  kOpen,
  kBackhaul,
  kMixedBackhaul,
  kDurationLimit,
  kTimeWindows,
  kMultiDepot,
};

inline constexpr std::array<Attribute, 6> kAllAttributes = {
    Attribute::kOpen,          Attribute::kBackhaul,    Attribute::kMixedBackhaul,
    Attribute::kDurationLimit, Attribute::kTimeWindows, Attribute::kMultiDepot,
};

// Short letter code: O, B, MB, L, TW, MD.
std::string_view attribute_code(Attribute a);
Attribute parse_attribute(std::string_view code);

// Which optional attributes are active on top of the always-present capacity.
struct VariantFlags {
  bool open = false;
  bool backhaul = false;
  bool mixed_backhaul = false;
  bool duration_limit = false;
  bool time_windows = false;
  bool multi_depot = false;

  static VariantFlags all() { return {true, true, true, true, true, true}; }

  bool get(Attribute a) const;
  void set(Attribute a, bool value);

  // Mixed backhaul is a mode of backhaul.
  bool valid() const { return !mixed_backhaul || backhaul; }

  // Attribute-wise AND.
  VariantFlags operator&(const VariantFlags& other) const;

  friend bool operator==(const VariantFlags&, const VariantFlags&) = default;
};

// Table-5 spelling, letter order MD, O, VRP, B/MB, L, TW. Throws InvalidFlags.
std::string canonical_name(const VariantFlags& flags);
VariantFlags parse_variant(std::string_view name);

inline constexpr int kNumVariants = 48;

// Dense 0..47 index over valid flag settings, ordered as in the variant table.
class VariantKey {
 public:
  constexpr VariantKey() = default;
  explicit VariantKey(int value);
  explicit VariantKey(const VariantFlags& flags);

  int value() const { return value_; }
  VariantFlags flags() const;
  std::string name() const;

  friend auto operator<=>(const VariantKey&, const VariantKey&) = default;

 private:
  int value_ = 0;
};

// All 48 variants in table order.
const std::array<VariantFlags, kNumVariants>& all_variants();

}  // namespace mtvrp
