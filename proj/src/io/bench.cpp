#include "mtvrp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "mtvrp/generator.hpp"
#include "mtvrp/io.hpp"

namespace mtvrp {

double gap(double obj, double ref) {
  if (!(ref > 0.0)) throw std::domain_error("reference cost must be positive");
  return 100.0 * (obj - ref) / ref;
}

BenchSuite read_suite(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad suite file: ") + e.what());
  }
  BenchSuite suite;
  try {
    suite.seed = j.value("seed", std::uint64_t{0});
    suite.n = j.value("n", 20);
    suite.m = j.value("m", 3);
    suite.count = j.value("count", 1);
    for (const auto& name : j.value("variants", std::vector<std::string>{"CVRP"})) {
      if (name == "all") {
        suite.variants.assign(all_variants().begin(), all_variants().end());
      } else {
        suite.variants.push_back(parse_variant(name));
      }
    }
    if (j.contains("methods")) {
      suite.methods.clear();
      for (const auto& name : j.at("methods").get<std::vector<std::string>>()) {
        suite.methods.push_back(parse_method(name));
      }
    }
    for (const auto& file : j.value("instances", std::vector<std::string>{})) {
      std::filesystem::path p(file);
      suite.instance_files.push_back(p.is_absolute() ? p : path.parent_path() / p);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad suite file: ") + e.what());
  }
  if (suite.n < 1 || suite.m < 1 || suite.count < 0) throw ParseError("suite sizes must be positive");
  return suite;
}

std::map<std::string, double> read_refs(const std::filesystem::path& path) {
  std::istringstream in(read_text(path));
  std::map<std::string, double> refs;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.starts_with("instance_id")) continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("refs line without comma: " + line);
    try {
      refs[line.substr(0, comma)] = std::stod(line.substr(comma + 1));
    } catch (const std::exception&) {
      throw ParseError("bad reference cost: " + line);
    }
  }
  return refs;
}

Instance suite_instance(const BenchSuite& suite, const VariantFlags& variant, int index) {
  GeneratorConfig config;
  config.n = suite.n;
  config.m = variant.multi_depot ? suite.m : 1;
  config.seed = suite.seed;
  config.backhaul_class = variant.mixed_backhaul ? BackhaulClass::kMixed : BackhaulClass::kTraditional;
  return apply_flags(generate_instance(config, static_cast<std::uint64_t>(index)), variant);
}

std::string suite_instance_id(const VariantFlags& variant, int index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d", index);
  return canonical_name(variant) + "-" + buf;
}

namespace {

struct Task {
  int batch;
  std::string id;
  std::function<Instance()> load;
  SolverMethod method;
};

std::string opt_number(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

}  // namespace

std::vector<BenchRecord> run_bench(const BenchSuite& suite, const std::map<std::string, double>& refs,
                                   const BenchOptions& options) {
  std::vector<Task> tasks;
  if (!suite.instance_files.empty()) {
    for (std::size_t i = 0; i < suite.instance_files.size(); ++i) {
      const auto path = suite.instance_files[i];
      for (auto method : suite.methods) {
        tasks.push_back({static_cast<int>(i), path.stem().string(), [path] { return read_instance(path); }, method});
      }
    }
  } else {
    for (int index = 0; index < suite.count; ++index) {
      for (const auto& variant : suite.variants) {
        for (auto method : suite.methods) {
          tasks.push_back({index, suite_instance_id(variant, index),
                           [&suite, variant, index] { return suite_instance(suite, variant, index); }, method});
        }
      }
    }
  }

  std::vector<BenchRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      try {
      const Task& task = tasks[t];
      const Instance instance = task.load();
      SolverConfig config;
      config.method = task.method;
      config.seed = Rng(suite.seed).split(static_cast<std::uint64_t>(task.batch)).next();
      const auto start = std::chrono::steady_clock::now();
      const Solution solution = solve(instance, config);
      const auto elapsed = std::chrono::steady_clock::now() - start;

      BenchRecord& r = records[t];
      r.instance_id = task.id;
      r.variant = instance.variant_name();
      r.method = std::string(method_name(task.method));
      r.cost = solution.cost * instance.scale();
      if (const auto it = refs.find(task.id); it != refs.end()) {
        r.reference_cost = it->second;
        r.gap_percent = gap(r.cost, it->second);
      }
      r.wall_time_ms =
          options.timing ? std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() : 0;
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned count = options.threads > 0 ? static_cast<unsigned>(options.threads) : hw;
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < std::min<std::size_t>(count, std::max<std::size_t>(1, tasks.size())); ++i) {
      pool.emplace_back(worker);
    }
  }
  if (failure) std::rethrow_exception(failure);

  if (options.reward_norm) {
    // One normalizer per method; each instance index is one mixed batch.
    std::map<std::string, NormalizerState> states;
    std::size_t begin = 0;
    while (begin < records.size()) {
      std::size_t end = begin;
      while (end < records.size() && tasks[end].batch == tasks[begin].batch) ++end;
      std::map<std::string, std::vector<std::size_t>> by_method;
      for (std::size_t i = begin; i < end; ++i) by_method[records[i].method].push_back(i);
      for (const auto& [method, idx] : by_method) {
        auto [it, inserted] = states.try_emplace(method);
        if (inserted) {
          it->second.mode = *options.reward_norm;
          it->second.alpha = options.alpha;
        }
        std::vector<double> rewards;
        std::vector<VariantKey> keys;
        for (auto i : idx) {
          rewards.push_back(-records[i].cost);
          keys.emplace_back(parse_variant(records[i].variant));
        }
        it->second = update_normalizer(std::move(it->second), per_variant_batch_mean(rewards, keys));
        const auto norm = normalize(rewards, keys, it->second);
        for (std::size_t k = 0; k < idx.size(); ++k) records[idx[k]].normalized_reward = norm[k];
      }
      begin = end;
    }
  }
  return records;
}

std::string records_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << "instance_id,variant,method,cost,reference_cost,gap_percent,wall_time_ms,normalized_reward\n";
  for (const auto& r : records) {
    os << r.instance_id << ',' << r.variant << ',' << r.method << ',' << format_number(r.cost) << ','
       << opt_number(r.reference_cost) << ',' << opt_number(r.gap_percent) << ',' << r.wall_time_ms << ','
       << opt_number(r.normalized_reward) << '\n';
  }
  return os.str();
}

std::string records_to_json(const std::vector<BenchRecord>& records) {
  const auto num = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string("null"); };
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    os << "  {\"instance_id\": " << nlohmann::json(r.instance_id).dump() << ", \"variant\": \"" << r.variant
       << "\", \"method\": \"" << r.method << "\", \"cost\": " << format_number(r.cost)
       << ", \"reference_cost\": " << num(r.reference_cost) << ", \"gap_percent\": " << num(r.gap_percent)
       << ", \"wall_time_ms\": " << r.wall_time_ms << ", \"normalized_reward\": " << num(r.normalized_reward)
       << "}" << (i + 1 < records.size() ? "," : "") << "\n";
  }
  os << "]\n";
  return os.str();
}

}  // namespace mtvrp
