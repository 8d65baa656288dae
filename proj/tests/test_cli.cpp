#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "blockwake/cli.hpp"

namespace fs = std::filesystem;
using blockwake::cli::dispatch;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("blockwake_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("plan parse") {
  const auto r = run({"plan", "parse", "B6,8,6-O5"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"sizes\":[6,8,6],\"overlaps\":[5],\"truncated\":false}\n");

  const auto bad = run({"plan", "parse", "B5-O5"});
  CHECK(bad.code == blockwake::cli::kInvalidPlan);
  CHECK(bad.err.find("\"error\":\"validation\"") != std::string::npos);

  const auto garbled = run({"plan", "parse", "B5-Q5"});
  CHECK(garbled.code == blockwake::cli::kInvalidPlan);
  CHECK(garbled.err.find("position") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({"plan", "parse", "B5-O1", "--bogus"}).code == blockwake::cli::kUsage);
  CHECK(run({"frobnicate"}).code == blockwake::cli::kUsage);
  CHECK(run({}).code == blockwake::cli::kUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("plan expand") {
  const auto r = run({"plan", "expand", "B5-O0", "--m", "10", "--cycles", "3", "--recomb", "A"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"offset\":9") != std::string::npos);
  CHECK(r.out.find("\"verse\":\"reverse\"") != std::string::npos);
  CHECK(run({"plan", "expand", "B2-O1", "--m", "1"}).code == blockwake::cli::kInvalidPlan);
}

TEST_CASE("search run writes its outputs and is repeatable") {
  const auto a = scratch("search_a"), b = scratch("search_b");
  const std::vector<std::string> base{"search", "run", "--plan", "B3-O1", "--m", "8",
                                      "--cycles", "3", "--recomb", "B", "--seed", "5",
                                      "--dump-cache", "--out"};
  auto args_a = base, args_b = base;
  args_a.push_back(a.string());
  args_b.push_back(b.string());
  const auto ra = run(args_a);
  const auto rb = run(args_b);
  REQUIRE(ra.code == 0);
  CHECK(ra.out == rb.out);
  for (const char* f : {"trace.csv", "indicators.csv", "quality.csv", "efficiency.csv",
                        "cache.csv", "summary.json"}) {
    CAPTURE(f);
    CHECK(fs::exists(a / f));
    CHECK(slurp(a / f) == slurp(b / f));
  }

  const auto ind = scratch("ind") / "indicators.csv";
  const auto rc = run({"indicators", "compute", "--trace", (a / "trace.csv").string(), "--out",
                       ind.string()});
  CHECK(rc.code == 0);
  CHECK(slurp(ind) == slurp(a / "indicators.csv"));
  fs::remove_all(a);
  fs::remove_all(b);
  fs::remove_all(ind.parent_path());
}

TEST_CASE("failures leave no partial outputs") {
  const auto dir = scratch("budget");
  const auto r = run({"search", "run", "--plan", "B5-O4", "--m", "10", "--cache-capacity", "10",
                      "--out", dir.string()});
  CHECK(r.code == blockwake::cli::kBudget);
  CHECK_FALSE(fs::exists(dir / "trace.csv"));
  CHECK_FALSE(fs::exists(dir / "summary.json"));

  const auto brute = run({"bench", "brute", "--m", "10", "--budget", "100", "--out", dir.string()});
  CHECK(brute.code == blockwake::cli::kBudget);
  CHECK_FALSE(fs::exists(dir / "hist.csv"));
  fs::remove_all(dir);
}

TEST_CASE("configuration errors") {
  const auto dir = scratch("config");
  CHECK(run({"search", "run", "--plan", "B3-O1", "--landscape", "volcano", "--out", dir.string()})
            .code == blockwake::cli::kConfig);
  CHECK(run({"search", "run", "--plan", "B3-O1", "--m", "4", "--ordering", "0,0,1,2", "--out",
             dir.string()})
            .code == blockwake::cli::kConfig);
  CHECK(run({"search", "run", "--plan", "B3-O1", "--variants", "urr=cube", "--out", dir.string()})
            .code == blockwake::cli::kConfig);
  CHECK(run({"indicators", "compute", "--trace", (dir / "missing.csv").string(), "--out",
             (dir / "x.csv").string()})
            .code == blockwake::cli::kIo);
  fs::remove_all(dir);
}

TEST_CASE("bench brute") {
  const auto dir = scratch("brute");
  const auto r = run({"bench", "brute", "--m", "10", "--levels", "3", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"evaluations\":59049") != std::string::npos);
  CHECK(fs::exists(dir / "hist.csv"));
  fs::remove_all(dir);
}

TEST_CASE("exp run on a small manifest") {
  const auto dir = scratch("exp");
  fs::create_directories(dir);
  {
    std::ofstream m(dir / "plans.txt");
    m << "B5-O0,1,none\nB5-O0,3,none\nB5-O0,3,B\n";
  }
  const auto out = dir / "report";
  const auto r = run({"exp", "run", "--plans", (dir / "plans.txt").string(), "--m", "10",
                      "--orderings", "5", "--jobs", "2", "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(fs::exists(out / "report.json"));
  CHECK(fs::exists(out / "hist_B5-O0-B-3c.csv"));
  const auto cmp = slurp(out / "comparisons.csv");
  CHECK(cmp.find("\"B5-O0-n-3c\",\"B5-O0-B-3c\"") != std::string::npos);
  fs::remove_all(dir);
}
