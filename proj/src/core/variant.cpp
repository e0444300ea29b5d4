#include "mtvrp/variant.hpp"

#include <algorithm>

namespace mtvrp {

namespace {

constexpr std::array<std::string_view, 24> kSingleDepotNames = {
    "CVRP",     "OVRP",     "VRPB",     "VRPL",      "VRPTW",    "OVRPTW",   "OVRPB",    "OVRPL",
    "VRPBL",    "VRPBTW",   "VRPLTW",   "OVRPBL",    "OVRPBTW",  "OVRPLTW",  "VRPBLTW",  "OVRPBLTW",
    "VRPMB",    "OVRPMB",   "VRPMBL",   "VRPMBTW",   "OVRPMBL",  "OVRPMBTW", "VRPMBLTW", "OVRPMBLTW",
};

std::array<VariantFlags, kNumVariants> build_table() {
  std::array<VariantFlags, kNumVariants> table{};
  for (std::size_t i = 0; i < kSingleDepotNames.size(); ++i) {
    table[i] = parse_variant(kSingleDepotNames[i]);
    table[i + kSingleDepotNames.size()] = table[i];
    table[i + kSingleDepotNames.size()].multi_depot = true;
  }
  return table;
}

bool consume(std::string_view& s, std::string_view prefix) {
  if (s.starts_with(prefix)) {
    s.remove_prefix(prefix.size());
    return true;
  }
  return false;
}

}  // namespace

std::string_view attribute_code(Attribute a) {
  switch (a) {
    case Attribute::kOpen: return "O";
    case Attribute::kBackhaul: return "B";
    case Attribute::kMixedBackhaul: return "MB";
    case Attribute::kDurationLimit: return "L";
    case Attribute::kTimeWindows: return "TW";
    case Attribute::kMultiDepot: return "MD";
  }
  return "?";
}

Attribute parse_attribute(std::string_view code) {
  for (Attribute a : kAllAttributes) {
    if (attribute_code(a) == code) return a;
  }
  throw InvalidFlags("unknown attribute code: " + std::string(code));
}

bool VariantFlags::get(Attribute a) const {
  switch (a) {
    case Attribute::kOpen: return open;
    case Attribute::kBackhaul: return backhaul;
    case Attribute::kMixedBackhaul: return mixed_backhaul;
    case Attribute::kDurationLimit: return duration_limit;
    case Attribute::kTimeWindows: return time_windows;
    case Attribute::kMultiDepot: return multi_depot;
  }
  return false;
}

void VariantFlags::set(Attribute a, bool value) {
  switch (a) {
    case Attribute::kOpen: open = value; break;
    case Attribute::kBackhaul: backhaul = value; break;
    case Attribute::kMixedBackhaul: mixed_backhaul = value; break;
    case Attribute::kDurationLimit: duration_limit = value; break;
    case Attribute::kTimeWindows: time_windows = value; break;
    case Attribute::kMultiDepot: multi_depot = value; break;
  }
}

VariantFlags VariantFlags::operator&(const VariantFlags& other) const {
  return {open && other.open,
          backhaul && other.backhaul,
          mixed_backhaul && other.mixed_backhaul,
          duration_limit && other.duration_limit,
          time_windows && other.time_windows,
          multi_depot && other.multi_depot};
}

std::string canonical_name(const VariantFlags& flags) {
  if (!flags.valid()) throw InvalidFlags("mixed backhaul requires backhaul");
  std::string name = flags.multi_depot ? "MD" : "";
  if (flags.open) {
    name += "OVRP";
  } else if (flags.backhaul || flags.duration_limit || flags.time_windows) {
    name += "VRP";
  } else {
    name += "CVRP";
  }
  if (flags.mixed_backhaul) {
    name += "MB";
  } else if (flags.backhaul) {
    name += "B";
  }
  if (flags.duration_limit) name += "L";
  if (flags.time_windows) name += "TW";
  return name;
}

VariantFlags parse_variant(std::string_view name) {
  const std::string original(name);
  VariantFlags flags;
  flags.multi_depot = consume(name, "MD");
  if (consume(name, "CVRP")) {
    if (!name.empty()) throw InvalidFlags("unknown variant: " + original);
    return flags;
  }
  flags.open = consume(name, "O");
  if (!consume(name, "VRP")) throw InvalidFlags("unknown variant: " + original);
  if (consume(name, "MB")) {
    flags.backhaul = flags.mixed_backhaul = true;
  } else {
    flags.backhaul = consume(name, "B");
  }
  flags.duration_limit = consume(name, "L");
  flags.time_windows = consume(name, "TW");
  // "VRP" alone is not a table name; the plain capacitated case is spelled CVRP.
  if (!name.empty() || canonical_name(flags) != original) {
    throw InvalidFlags("unknown variant: " + original);
  }
  return flags;
}

const std::array<VariantFlags, kNumVariants>& all_variants() {
  static const auto table = build_table();
  return table;
}

VariantKey::VariantKey(int value) : value_(value) {
  if (value < 0 || value >= kNumVariants) throw InvalidFlags("variant key out of range");
}

VariantKey::VariantKey(const VariantFlags& flags) {
  if (!flags.valid()) throw InvalidFlags("mixed backhaul requires backhaul");
  const auto& table = all_variants();
  value_ = static_cast<int>(std::find(table.begin(), table.end(), flags) - table.begin());
}

VariantFlags VariantKey::flags() const { return all_variants()[static_cast<std::size_t>(value_)]; }

std::string VariantKey::name() const { return canonical_name(flags()); }

}  // namespace mtvrp
