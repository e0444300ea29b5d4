#include "mtvrp/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mtvrp/adapters.hpp"
#include "mtvrp/bench.hpp"
#include "mtvrp/generator.hpp"
#include "mtvrp/heuristics.hpp"
#include "mtvrp/io.hpp"
#include "mtvrp/validator.hpp"

namespace mtvrp {

namespace fs = std::filesystem;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RF_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("RF_SEED", std::string("not an unsigned integer: ") + env);
    }
  }
  return 0;
}

std::vector<VariantFlags> parse_variant_list(const std::string& text) {
  std::vector<VariantFlags> out;
  std::istringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) continue;
    if (name == "all") {
      out.insert(out.end(), all_variants().begin(), all_variants().end());
    } else {
      out.push_back(parse_variant(name));
    }
  }
  if (out.empty()) throw InvalidFlags("no variants given");
  return out;
}

Instance load_any(const fs::path& path) {
  if (path.extension() == ".vrp") return read_cvrplib(path);
  return read_instance(path);
}

std::vector<fs::path> instance_paths(const fs::path& in) {
  if (!fs::is_directory(in)) return {in};
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(in)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".json" || ext == ".vrp")) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void print_vector(std::ostream& out, const std::string& label, const std::vector<double>& v) {
  out << label << " [";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << format_number(v[i]);
  out << "]\n";
}

// Three context features extended by three more, as in the backhaul and
// multi-depot additions.
int adapters_demo(std::ostream& out, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<double>> rows(3, std::vector<double>(4));
  for (auto& row : rows) {
    for (auto& w : row) w = rng.uniform(-0.5, 0.5);
  }
  std::vector<double> bias(4);
  for (auto& b : bias) b = rng.uniform(-0.1, 0.1);
  const ProjectionWeights base(rows, {"available_load", "current_time", "distance_traveled"}, bias);
  const std::vector<std::string> extra = {"available_backhaul_load", "origin_x", "origin_y"};
  const ProjectionWeights eal = eal_augment(base, extra);
  const ProjectionWeights al = al_reinit(base, extra, rng);

  const std::vector<double> x = {0.62, 1.35, 0.8};
  std::vector<double> x_ext = x;
  x_ext.insert(x_ext.end(), {0.4, 0.27, 0.91});

  out << "weights before: " << weights_to_json(base) << "\n";
  print_vector(out, "project(before, x)        =", project(base, x));
  print_vector(out, "project(EAL, x + new)     =", project(eal, x_ext));
  print_vector(out, "project(AL, x + new)      =", project(al, x_ext));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-task vehicle routing toolkit", "mtvrp"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::vector<CLI::Option*> seed_options;

  auto* gen = app.add_subcommand("generate", "Write seeded instances as JSON");
  int gen_n = 20, gen_m = 3, gen_count = 1;
  std::string gen_variants = "CVRP";
  fs::path gen_out;
  gen->add_option("--n", gen_n, "Customers per instance")->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_m, "Depots for MD variants")->check(CLI::PositiveNumber);
  gen->add_option("--variants", gen_variants, "Comma-separated variant names, or 'all'");
  gen->add_option("--count", gen_count, "Instances per variant")->check(CLI::NonNegativeNumber);
  seed_options.push_back(gen->add_option("--seed", seed, "Base seed (default: RF_SEED or 0)"));
  gen->add_option("--out", gen_out, "Output directory")->required();

  auto* sol = app.add_subcommand("solve", "Solve instance files with a heuristic");
  fs::path solve_in, solve_out, solve_solutions;
  std::string solve_method = "greedy";
  int ls_iters = 1000;
  sol->add_option("--in", solve_in, "Instance file (.json or .vrp) or directory")->required();
  sol->add_option("--method", solve_method, "greedy, random or greedy+ls");
  seed_options.push_back(sol->add_option("--seed", seed, "Seed for the random method (default: RF_SEED or 0)"));
  sol->add_option("--ls-iters", ls_iters, "Accepted local-search moves")->check(CLI::NonNegativeNumber);
  sol->add_option("--out", solve_out, "Results CSV")->required();
  sol->add_option("--solutions", solve_solutions, "Directory for solution JSON files");

  auto* chk = app.add_subcommand("check", "Validate a solution against an instance");
  fs::path check_instance, check_solution;
  chk->add_option("--instance", check_instance)->required();
  chk->add_option("--solution", check_solution)->required();

  auto* ben = app.add_subcommand("bench", "Run a benchmark suite");
  fs::path bench_suite, bench_refs, bench_output;
  std::string bench_norm = "none", bench_format = "csv";
  double bench_alpha = 0.25;
  bool no_timing = false;
  int bench_threads = 0;
  ben->add_option("--suite", bench_suite, "Suite JSON file")->required();
  ben->add_option("--reward-norm", bench_norm, "none, sub_mean, div_mean, sub_ema or div_ema");
  ben->add_option("--alpha", bench_alpha, "EMA weight")->check(CLI::Range(0.0, 1.0));
  ben->add_option("--refs", bench_refs, "CSV of instance_id,reference_cost");
  ben->add_option("--out", bench_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  ben->add_option("--output", bench_output, "Write to this file instead of stdout");
  ben->add_flag("--no-timing", no_timing, "Report wall_time_ms as 0 for reproducible output");
  ben->add_option("--threads", bench_threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  auto* ada = app.add_subcommand("adapters", "Attribute adapter utilities");
  auto* demo = ada->add_subcommand("demo", "Show projections before and after EAL and AL");
  ada->require_subcommand(1);
  seed_options.push_back(demo->add_option("--seed", seed));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (std::none_of(seed_options.begin(), seed_options.end(), [](auto* o) { return o->count() > 0; })) {
      seed = default_seed();
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*gen) {
      BenchSuite suite;
      suite.seed = seed;
      suite.n = gen_n;
      suite.m = gen_m;
      suite.variants = parse_variant_list(gen_variants);
      fs::create_directories(gen_out);
      int written = 0;
      for (int index = 0; index < gen_count; ++index) {
        for (const auto& variant : suite.variants) {
          const Instance instance = suite_instance(suite, variant, index);
          write_instance(instance, gen_out / (suite_instance_id(variant, index) + ".json"));
          ++written;
        }
      }
      out << "wrote " << written << " instances to " << gen_out.string() << "\n";
      return kExitOk;
    }

    if (*sol) {
      SolverConfig config;
      config.method = parse_method(solve_method);
      config.seed = seed;
      config.ls_max_iters = ls_iters;
      if (!solve_solutions.empty()) fs::create_directories(solve_solutions);
      std::vector<BenchRecord> records;
      int infeasible = 0;
      for (const auto& path : instance_paths(solve_in)) {
        const Instance instance = load_any(path);
        const Solution solution = solve(instance, config);
        const Verdict verdict = check(instance, solution);
        if (!verdict.feasible) ++infeasible;
        BenchRecord r;
        r.instance_id = path.stem().string();
        r.variant = instance.variant_name();
        r.method = std::string(method_name(config.method));
        r.cost = solution.cost * instance.scale();
        records.push_back(r);
        if (!solve_solutions.empty()) {
          write_text(solve_solutions / (r.instance_id + ".solution.json"), solution_to_json(solution, r.instance_id));
        }
      }
      write_text(solve_out, records_to_csv(records));
      out << "solved " << records.size() << " instances\n";
      return infeasible == 0 ? kExitOk : kExitInvalid;
    }

    if (*chk) {
      const Instance instance = load_any(check_instance);
      const Solution solution = read_solution(instance, check_solution);
      const Verdict verdict = check(instance, solution);
      out << verdict_to_json(verdict);
      return verdict.feasible ? kExitOk : kExitInvalid;
    }

    if (*ben) {
      BenchSuite suite = read_suite(bench_suite);
      const auto refs = bench_refs.empty() ? std::map<std::string, double>{} : read_refs(bench_refs);
      BenchOptions options;
      options.reward_norm = parse_norm_mode(bench_norm);
      options.alpha = bench_alpha;
      options.timing = !no_timing;
      options.threads = bench_threads;
      const auto records = run_bench(suite, refs, options);
      const std::string text = bench_format == "json" ? records_to_json(records) : records_to_csv(records);
      if (bench_output.empty()) {
        out << text;
      } else {
        write_text(bench_output, text);
      }
      return kExitOk;
    }

    if (*demo) return adapters_demo(out, seed);
  } catch (const MalformedSolution& e) {
    err << "error: malformed solution: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace mtvrp
