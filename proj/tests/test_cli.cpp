#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "mtvrp/cli.hpp"
#include "mtvrp/generator.hpp"
#include "mtvrp/heuristics.hpp"
#include "mtvrp/io.hpp"
#include "support.hpp"

using namespace mtvrp;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("mtvrp_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::size_t count_files(const fs::path& dir) {
  return static_cast<std::size_t>(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}));
}

}  // namespace

TEST(Cli, GenerateIsDeterministic) {
  const fs::path dir = scratch("gen");
  ASSERT_EQ(cli({"generate", "--n", "50", "--count", "3", "--seed", "1", "--out", (dir / "a").string()}).code, 0);
  ASSERT_EQ(cli({"generate", "--n", "50", "--count", "3", "--seed", "1", "--out", (dir / "b").string()}).code, 0);
  EXPECT_EQ(count_files(dir / "a"), 3u);
  for (const auto& e : fs::directory_iterator(dir / "a")) {
    EXPECT_EQ(read_text(e.path()), read_text(dir / "b" / e.path().filename()));
  }
}

TEST(Cli, SeedFromEnvironment) {
  const fs::path dir = scratch("env");
  ::setenv("RF_SEED", "1", 1);
  ASSERT_EQ(cli({"generate", "--n", "10", "--out", (dir / "env").string()}).code, 0);
  ::unsetenv("RF_SEED");
  ASSERT_EQ(cli({"generate", "--n", "10", "--seed", "1", "--out", (dir / "flag").string()}).code, 0);
  ASSERT_EQ(cli({"generate", "--n", "10", "--seed", "2", "--out", (dir / "other").string()}).code, 0);
  EXPECT_EQ(read_text(dir / "env/CVRP-0000.json"), read_text(dir / "flag/CVRP-0000.json"));
  EXPECT_NE(read_text(dir / "other/CVRP-0000.json"), read_text(dir / "flag/CVRP-0000.json"));
}

TEST(Cli, SolveThenCheck) {
  const fs::path dir = scratch("solve");
  ASSERT_EQ(cli({"generate", "--n", "12", "--variants", "VRPTW,MDOVRPBL", "--seed", "4", "--out",
                 (dir / "inst").string()}).code, 0);
  const CliResult solved = cli({"solve", "--in", (dir / "inst").string(), "--method", "greedy+ls", "--out",
                          (dir / "r.csv").string(), "--solutions", (dir / "sol").string()});
  ASSERT_EQ(solved.code, 0) << solved.err;
  const std::string csv = read_text(dir / "r.csv");
  EXPECT_NE(csv.find("MDOVRPBL-0000,MDOVRPBL,greedy+ls,"), std::string::npos);
  const CliResult ok = cli({"check", "--instance", (dir / "inst/VRPTW-0000.json").string(), "--solution",
                      (dir / "sol/VRPTW-0000.solution.json").string()});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_NE(ok.out.find("\"feasible\": true"), std::string::npos);
}

TEST(Cli, CheckRejectsInfeasible) {
  const fs::path dir = scratch("check");
  const Instance inst(test::plain({{0, 0}, {0.1, 0}, {0.2, 0}}, {0, 0.6, 0.6}));
  write_instance(inst, dir / "i.json");
  write_text(dir / "s.json", R"({"schema_version": 1, "actions": [0, 1, 2, 0]})");
  const CliResult r = cli({"check", "--instance", (dir / "i.json").string(), "--solution", (dir / "s.json").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("CAPACITY_LINEHAUL"), std::string::npos);
  write_text(dir / "bad.json", R"({"schema_version": 1, "actions": [0, 7, 0]})");
  EXPECT_EQ(cli({"check", "--instance", (dir / "i.json").string(), "--solution", (dir / "bad.json").string()}).code,
            1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"generate"}).code, 2);
  EXPECT_EQ(cli({"bench", "--suite", "x.json", "--out", "xml"}).code, 2);
  EXPECT_EQ(cli({"generate", "--n", "five", "--out", "x"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, BadInputsAreValidationFailures) {
  const fs::path dir = scratch("bad");
  EXPECT_EQ(cli({"generate", "--variants", "VRPQ", "--out", dir.string()}).code, 1);
  EXPECT_EQ(cli({"solve", "--in", (dir / "none.json").string(), "--out", (dir / "r.csv").string()}).code, 1);
  write_text(dir / "s.json", R"({"n": 5, "variants": ["CVRP"]})");
  EXPECT_EQ(cli({"bench", "--suite", (dir / "s.json").string(), "--reward-norm", "bogus"}).code, 1);
}

TEST(Cli, BenchAllVariantsHundredInstances) {
  const fs::path dir = scratch("bench");
  write_text(dir / "s.json", R"({"seed": 1, "n": 20, "count": 100, "variants": ["all"], "methods": ["greedy"]})");
  const CliResult r = cli({"bench", "--suite", (dir / "s.json").string(), "--reward-norm", "div_ema", "--alpha", "0.25",
                     "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = std::count(r.out.begin(), r.out.end(), '\n');
  EXPECT_EQ(lines, 4801);
}

TEST(Cli, AdaptersDemo) {
  const CliResult r = cli({"adapters", "demo"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("project(EAL"), std::string::npos);
}
