#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mtvrp/io.hpp"

namespace mtvrp {

using nlohmann::json;

namespace {

std::string number_or_inf(double v) { return std::isinf(v) && v > 0 ? "\"inf\"" : format_number(v); }

template <typename T, typename F>
std::string array(const std::vector<T>& values, F&& fmt) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += fmt(values[i]);
  }
  return out + "]";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

double read_number(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return kUnbounded;
    throw ParseError(std::string("field '") + key + "' must be a number or \"inf\"");
  }
  if (!v.is_number()) throw ParseError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::vector<double> read_numbers(const json& j, const char* key) {
  const json& arr = j.at(key);
  if (!arr.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (v.is_string() && v.get<std::string>() == "inf") {
      out.push_back(kUnbounded);
    } else if (v.is_number()) {
      out.push_back(v.get<double>());
    } else {
      throw ParseError(std::string("non-numeric entry in '") + key + "'");
    }
  }
  return out;
}

void reject_nan(double v, const char* what) {
  if (std::isnan(v)) throw ParseError(std::string("NaN in ") + what);
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string instance_to_json(const Instance& instance) {
  const InstanceData& d = instance.data();
  const auto num = [](double v) { return format_number(v); };
  const auto num_inf = [](double v) { return number_or_inf(v); };
  const auto point = [](const Point& p) { return "[" + format_number(p.x) + ", " + format_number(p.y) + "]"; };

  std::ostringstream os;
  os << "{\n"
     << "  \"schema_version\": " << kSchemaVersion << ",\n"
     << "  \"variant\": \"" << instance.variant_name() << "\",\n"
     << "  \"m\": " << d.num_depots << ",\n"
     << "  \"n\": " << d.num_customers << ",\n"
     << "  \"coords\": " << array(d.coords, point) << ",\n"
     << "  \"capacity\": " << num(d.capacity) << ",\n"
     << "  \"linehaul\": " << array(d.linehaul, num) << ",\n"
     << "  \"backhaul\": " << array(d.backhaul, num) << ",\n"
     << "  \"tw_start\": " << array(d.tw_start, num) << ",\n"
     << "  \"tw_end\": " << array(d.tw_end, num_inf) << ",\n"
     << "  \"service\": " << array(d.service, num) << ",\n"
     << "  \"distance_limit\": " << number_or_inf(d.distance_limit) << ",\n"
     << "  \"t_max\": " << number_or_inf(d.t_max) << ",\n"
     << "  \"open\": " << bool_text(d.flags.open) << ",\n"
     << "  \"backhaul_class\": " << static_cast<int>(d.backhaul_class) << ",\n"
     << "  \"flags\": {"
     << "\"open\": " << bool_text(d.flags.open) << ", "
     << "\"backhaul\": " << bool_text(d.flags.backhaul) << ", "
     << "\"mixed_backhaul\": " << bool_text(d.flags.mixed_backhaul) << ", "
     << "\"duration_limit\": " << bool_text(d.flags.duration_limit) << ", "
     << "\"time_windows\": " << bool_text(d.flags.time_windows) << ", "
     << "\"multi_depot\": " << bool_text(d.flags.multi_depot) << "},\n"
     << "  \"scale\": " << num(d.scale) << "\n"
     << "}\n";
  return os.str();
}

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!j.contains("schema_version") || j.at("schema_version") != kSchemaVersion) {
      throw ParseError("unsupported schema_version");
    }
    InstanceData d;
    d.num_depots = j.at("m").get<int>();
    d.num_customers = j.at("n").get<int>();
    for (const auto& p : j.at("coords")) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        throw ParseError("coords entries must be [x, y] pairs");
      }
      d.coords.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    d.capacity = read_number(j, "capacity");
    d.linehaul = read_numbers(j, "linehaul");
    d.backhaul = read_numbers(j, "backhaul");
    d.tw_start = read_numbers(j, "tw_start");
    d.tw_end = read_numbers(j, "tw_end");
    d.service = read_numbers(j, "service");
    d.distance_limit = read_number(j, "distance_limit");
    d.t_max = read_number(j, "t_max");

    const json& f = j.at("flags");
    d.flags.open = f.at("open").get<bool>();
    d.flags.backhaul = f.at("backhaul").get<bool>();
    d.flags.mixed_backhaul = f.at("mixed_backhaul").get<bool>();
    d.flags.duration_limit = f.at("duration_limit").get<bool>();
    d.flags.time_windows = f.at("time_windows").get<bool>();
    d.flags.multi_depot = f.at("multi_depot").get<bool>();
    if (j.at("open").get<bool>() != d.flags.open) throw ParseError("'open' disagrees with flags.open");

    const int cls = j.at("backhaul_class").get<int>();
    if (cls != 1 && cls != 2) throw ParseError("backhaul_class must be 1 or 2");
    d.backhaul_class = static_cast<BackhaulClass>(cls);
    if (j.contains("scale")) d.scale = read_number(j, "scale");

    for (const auto& p : d.coords) {
      reject_nan(p.x, "coords");
      reject_nan(p.y, "coords");
    }
    for (const auto* v : {&d.linehaul, &d.backhaul, &d.tw_start, &d.tw_end, &d.service}) {
      for (double x : *v) reject_nan(x, "node attributes");
    }
    reject_nan(d.capacity, "capacity");
    reject_nan(d.distance_limit, "distance_limit");
    reject_nan(d.t_max, "t_max");

    if (auto problems = invariant_violations(d); !problems.empty()) {
      throw ParseError("invariant violation: " + problems.front());
    }
    Instance instance(std::move(d));
    if (j.contains("variant") && j.at("variant").get<std::string>() != instance.variant_name()) {
      throw ParseError("'variant' disagrees with flags");
    }
    return instance;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad instance document: ") + e.what());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void write_instance(const Instance& instance, const std::filesystem::path& path) {
  write_text(path, instance_to_json(instance));
}

Instance read_instance(const std::filesystem::path& path) { return instance_from_json(read_text(path)); }

std::string solution_to_json(const Solution& solution, const std::string& instance_id) {
  std::ostringstream os;
  os << "{\n  \"schema_version\": " << kSchemaVersion << ",\n";
  if (!instance_id.empty()) os << "  \"instance\": " << json(instance_id).dump() << ",\n";
  os << "  \"actions\": " << array(solution.actions, [](int a) { return std::to_string(a); }) << ",\n"
     << "  \"cost\": " << format_number(solution.cost) << "\n}\n";
  return os.str();
}

Solution solution_from_json(const Instance& instance, const std::string& text) {
  try {
    const json j = json::parse(text);
    if (!j.contains("schema_version") || j.at("schema_version") != kSchemaVersion) {
      throw ParseError("unsupported schema_version");
    }
    return make_solution(instance, j.at("actions").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad solution document: ") + e.what());
  }
}

Solution read_solution(const Instance& instance, const std::filesystem::path& path) {
  return solution_from_json(instance, read_text(path));
}

std::string verdict_to_json(const Verdict& verdict) {
  json j;
  j["feasible"] = verdict.feasible;
  j["cost"] = verdict.cost ? json(*verdict.cost) : json(nullptr);
  j["violations"] = json::array();
  for (const auto& v : verdict.violations) {
    j["violations"].push_back({{"code", std::string(rule_code(v.rule))},
                               {"route", v.route},
                               {"node", v.node},
                               {"measured", v.measured},
                               {"bound", std::isinf(v.bound) ? json("inf") : json(v.bound)}});
  }
  return j.dump(2) + "\n";
}

}  // namespace mtvrp
