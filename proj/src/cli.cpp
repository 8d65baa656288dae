#include "blockwake/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockwake/bench.hpp"
#include "blockwake/engine.hpp"
#include "blockwake/error.hpp"
#include "blockwake/format.hpp"
#include "blockwake/indicators.hpp"
#include "blockwake/landscapes.hpp"
#include "blockwake/plan.hpp"

namespace blockwake::cli {

namespace {

using json = nlohmann::ordered_json;

class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "io"; }
};

int exit_code_for(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ValidationError*>(&e) ||
      dynamic_cast<const PlanError*>(&e))
    return kInvalidPlan;
  if (dynamic_cast<const BudgetError*>(&e)) return kBudget;
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const DomainError*>(&e)) return kConfig;
  if (dynamic_cast<const EvaluationError*>(&e) || dynamic_cast<const DegenerateError*>(&e))
    return kEvaluation;
  if (dynamic_cast<const IoError*>(&e)) return kIo;
  return kInternal;
}

void report_error(std::ostream& err, const std::string& kind, int code, const std::string& message) {
  err << json{{"error", kind}, {"code", code}, {"message", message}}.dump() << '\n';
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BLOCKWAKE_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::logic_error&) {
    }
    throw ConfigError("BLOCKWAKE_SEED must be a non-negative integer");
  }
  return 1;
}

ParameterSpace make_space(std::size_t m, const std::string& levels) {
  if (m < 1) throw ConfigError("--m must be at least 1");
  std::vector<std::size_t> cards;
  for (const auto& field : split(levels, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(field, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != field.size() || v < 1)
      throw ConfigError("--levels must be positive integers, got '" + levels + "'");
    cards.push_back(static_cast<std::size_t>(v));
  }
  if (cards.size() == 1) cards.assign(m, cards[0]);
  if (cards.size() != m)
    throw ConfigError("--levels lists " + std::to_string(cards.size()) + " values for m = " +
                      std::to_string(m));
  return ParameterSpace::from_cardinalities(cards);
}

std::vector<std::size_t> parse_ordering(const std::string& text, std::size_t m) {
  if (text.empty()) return identity_ordering(m);
  std::vector<std::size_t> out;
  for (const auto& c : parse_point(text).coords) out.push_back(c);
  check_ordering(out, m);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json structure_json(const StructureSpec& s) {
  return json{{"sizes", s.sizes}, {"overlaps", s.overlaps}, {"truncated", s.truncated}};
}

std::string dump_to_string(const auto& writer) {
  std::ostringstream ss;
  writer(ss);
  return ss.str();
}

// Options shared by the commands that run searches over a grid.
struct GridOptions {
  std::size_t m = 10;
  std::string levels = "3";
  std::string landscape = "trap";
  std::uint64_t seed = 1;
};

void add_grid_options(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--m", g.m, "Parameter count")->capture_default_str();
  cmd->add_option("--levels", g.levels, "Levels per parameter: one value or a comma list")
      ->capture_default_str();
  cmd->add_option("--landscape", g.landscape,
                  "separable | trap[:group=N,noise=X] | random | conflict[:pairs=N,bounds=oracle]")
      ->capture_default_str();
  cmd->add_option("--seed", g.seed, "Seed (default: $BLOCKWAKE_SEED or 1)");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Overlapping block coordinate descent toolkit", "blockwake"};
  app.require_subcommand(1);

  GridOptions grid;
  std::string plan_name;
  std::size_t cycles = 1;
  std::string recomb = "none";
  std::string out_path;
  std::string variants_text;

  // plan
  auto* plan_cmd = app.add_subcommand("plan", "Inspect search structures");
  plan_cmd->require_subcommand(1);
  auto* plan_parse = plan_cmd->add_subcommand("parse", "Parse a structure name");
  plan_parse->add_option("name", plan_name, "Structure name, e.g. B5-O4")->required();
  auto* plan_expand = plan_cmd->add_subcommand("expand", "Expand a structure into cycles");
  std::size_t expand_m = 10;
  plan_expand->add_option("name", plan_name, "Structure name")->required();
  plan_expand->add_option("--m", expand_m, "Parameter count")->capture_default_str();
  plan_expand->add_option("--cycles", cycles, "Sweep cycles")->capture_default_str();
  plan_expand->add_option("--recomb", recomb, "none | A | B")->capture_default_str();
  plan_expand->add_option("--out", out_path, "Write JSON to this file instead of stdout");

  // search run
  auto* search_cmd = app.add_subcommand("search", "Single searches");
  search_cmd->require_subcommand(1);
  auto* search_run = search_cmd->add_subcommand("run", "Run one search and its indicators");
  std::string init = "mid";
  std::string init_point;
  std::string ordering_text;
  bool dump_cache = false;
  std::size_t cache_capacity = 0;
  search_run->add_option("--plan", plan_name, "Structure name")->required();
  add_grid_options(search_run, grid);
  search_run->add_option("--cycles", cycles, "Sweep cycles")->capture_default_str();
  search_run->add_option("--recomb", recomb, "none | A | B")->capture_default_str();
  search_run->add_option("--init", init, "fixed | mid | random")->capture_default_str();
  search_run->add_option("--init-point", init_point, "Level indices for --init fixed");
  search_run->add_option("--ordering", ordering_text, "Parameter at each position (default identity)");
  search_run->add_option("--variants", variants_text, "Indicator variant flags");
  search_run->add_option("--cache-capacity", cache_capacity, "Memo cache limit, 0 = unbounded");
  search_run->add_flag("--dump-cache", dump_cache, "Also write cache.csv");
  search_run->add_option("--out", out_path, "Output directory")->required();

  // bench brute
  auto* bench_cmd = app.add_subcommand("bench", "Oracles");
  bench_cmd->require_subcommand(1);
  auto* bench_brute = bench_cmd->add_subcommand("brute", "Enumerate the whole grid");
  std::uint64_t budget = kDefaultBudget;
  std::size_t bins = 20;
  add_grid_options(bench_brute, grid);
  bench_brute->add_option("--budget", budget, "Maximum grid size")->capture_default_str();
  bench_brute->add_option("--bins", bins, "Histogram bins")->capture_default_str();
  bench_brute->add_option("--out", out_path, "Output directory")->required();

  // exp run
  auto* exp_cmd = app.add_subcommand("exp", "Experiments");
  exp_cmd->require_subcommand(1);
  auto* exp_run = exp_cmd->add_subcommand("run", "Plans x shared orderings experiment");
  std::string plans_file;
  std::size_t orderings = 590;
  bool fast = false;
  std::size_t jobs = 1;
  exp_run->add_option("--plans", plans_file, "Manifest of name,cycles,recomb lines, or 'default'")
      ->required();
  add_grid_options(exp_run, grid);
  exp_run->add_option("--orderings", orderings, "Random parameter orderings")->capture_default_str();
  exp_run->add_flag("--fast", fast, "Use 59 orderings");
  exp_run->add_option("--init", init, "fixed | mid | random")->capture_default_str();
  exp_run->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  exp_run->add_option("--bins", bins, "Histogram bins")->capture_default_str();
  exp_run->add_option("--variants", variants_text, "Indicator variant flags");
  exp_run->add_option("--out", out_path, "Output directory")->required();

  // indicators compute
  auto* ind_cmd = app.add_subcommand("indicators", "Indicator computation");
  ind_cmd->require_subcommand(1);
  auto* ind_compute = ind_cmd->add_subcommand("compute", "Indicators of an existing trace");
  std::string trace_path;
  std::string ind_levels = "3";
  ind_compute->add_option("--trace", trace_path, "trace.csv from search run")->required();
  ind_compute->add_option("--variants", variants_text, "Indicator variant flags");
  ind_compute->add_option("--levels", ind_levels, "Levels per parameter")->capture_default_str();
  ind_compute->add_option("--ordering", ordering_text, "Ordering used for the trace");
  ind_compute->add_option("--out", out_path, "Output CSV")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", kUsage, e.what());
    return kUsage;
  }

  try {
    bool seed_given = false;
    for (auto* cmd : {search_run, bench_brute, exp_run})
      if (cmd->parsed() && cmd->count("--seed") > 0) seed_given = true;
    if (!seed_given) grid.seed = default_seed();

    if (plan_parse->parsed()) {
      out << structure_json(parse_structure_name(plan_name)).dump() << '\n';
      return kOk;
    }

    if (plan_expand->parsed()) {
      const auto plan = assemble_plan(parse_structure_name(plan_name), expand_m, cycles,
                                      parse_recombination(recomb));
      const std::string body = plan_to_json(plan) + "\n";
      if (out_path.empty()) out << body;
      else write_file_atomic(out_path, body);
      return kOk;
    }

    if (search_run->parsed()) {
      // Validate everything before computing anything.
      const auto variants = IndicatorVariants::parse(variants_text);
      const ParameterSpace space = make_space(grid.m, grid.levels);
      const auto plan = assemble_plan(parse_structure_name(plan_name), grid.m, cycles,
                                      parse_recombination(recomb));
      const auto ordering = parse_ordering(ordering_text, grid.m);
      const auto landscape = make_landscape(grid.landscape, space, grid.seed);
      const InitPolicy policy = parse_init_policy(init);
      std::optional<Point> fixed;
      if (!init_point.empty()) fixed = parse_point(init_point);
      const Point start = initial_point(space, policy, grid.seed, fixed);

      MemoCache cache(cache_capacity);
      SearchTrace trace = run_search(space, *landscape, plan, ordering, start, cache);
      trace.seed = grid.seed;
      std::vector<Block> blocks;
      std::vector<double> values;
      for (const auto& r : trace.records) {
        blocks.push_back(r.block);
        values.push_back(r.value);
      }
      const auto rows =
          compute_indicators(blocks, position_cardinalities(space, ordering), values, variants);

      OutputSet files(out_path);
      files.add("trace.csv", dump_to_string([&](std::ostream& s) { write_trace_csv(s, trace); }));
      files.add("indicators.csv",
                dump_to_string([&](std::ostream& s) { write_indicator_csv(s, rows, variants); }));
      std::ostringstream quality, efficiency;
      quality << "iter,log_SQ\n";
      efficiency << "iter,log_SE\n";
      for (const auto& r : rows) {
        if (r.sq_max) quality << r.iter << ',' << format_double(std::log(*r.sq_max)) << '\n';
        if (r.se_log) efficiency << r.iter << ',' << format_double(*r.se_log) << '\n';
      }
      files.add("quality.csv", quality.str());
      files.add("efficiency.csv", efficiency.str());
      if (dump_cache) files.add("cache.csv", dump_to_string([&](std::ostream& s) { cache.dump_csv(s); }));
      json summary{{"plan", plan.label()},
                   {"landscape", landscape->describe()},
                   {"m", grid.m},
                   {"seed", grid.seed},
                   {"ordering", ordering},
                   {"init", format_point(start)},
                   {"initial_f", trace.initial_value},
                   {"final_f", trace.final_value()},
                   {"final_point", format_point(trace.records.back().point)},
                   {"iterations", trace.records.size()},
                   {"evaluations", cache.misses()},
                   {"cache_hits", cache.hits()},
                   {"variant_flags", variants.flags()}};
      files.add("summary.json", summary.dump(2) + "\n");
      files.commit();
      out << summary.dump() << '\n';
      return kOk;
    }

    if (bench_brute->parsed()) {
      const ParameterSpace space = make_space(grid.m, grid.levels);
      const auto landscape = make_landscape(grid.landscape, space, grid.seed, budget);
      const auto result = brute_force(space, *landscape, budget, bins);
      json summary{{"landscape", landscape->describe()},
                   {"m", grid.m},
                   {"evaluations", result.evaluations},
                   {"min", result.minimum},
                   {"argmin", format_point(result.argmin)},
                   {"max", result.maximum},
                   {"argmax", format_point(result.argmax)},
                   {"bounds", {result.bounds.min, result.bounds.max}}};
      summary["raw_bounds"] = json::array();
      for (const auto& b : result.raw_bounds) summary["raw_bounds"].push_back({b.min, b.max});
      OutputSet files(out_path);
      files.add("hist.csv",
                dump_to_string([&](std::ostream& s) { write_histogram_csv(s, result.histogram); }));
      files.add("summary.json", summary.dump(2) + "\n");
      files.commit();
      out << summary.dump() << '\n';
      return kOk;
    }

    if (exp_run->parsed()) {
      const auto variants = IndicatorVariants::parse(variants_text);
      const ParameterSpace space = make_space(grid.m, grid.levels);
      std::vector<PlanEntry> plans;
      if (plans_file == "default") {
        plans = default_plan_manifest();
      } else {
        std::istringstream in(read_file(plans_file));
        plans = read_plan_manifest(in);
      }
      for (const auto& p : plans)
        assemble_plan(parse_structure_name(p.name), grid.m, p.cycles, p.recombination);
      const auto landscape = make_landscape(grid.landscape, space, grid.seed);
      if (fast) orderings = 59;
      if (orderings < 1) throw ConfigError("--orderings must be at least 1");
      ExperimentConfig config;
      config.init = parse_init_policy(init);
      config.seed = grid.seed;
      config.jobs = std::max<std::size_t>(1, jobs);
      config.bins = bins;
      config.variants = variants;
      const auto orders = random_orderings(grid.m, orderings, grid.seed);
      const auto report = run_experiment(space, *landscape, plans, orders, config);
      write_report(report, out_path);
      std::size_t failed = 0;
      for (const auto& p : report.plans) failed += p.failures.size();
      out << json{{"plans", report.plans.size()},
                  {"orderings", report.orderings},
                  {"failed_cells", failed},
                  {"out", out_path}}
                 .dump()
          << '\n';
      return kOk;
    }

    if (ind_compute->parsed()) {
      const auto variants = IndicatorVariants::parse(variants_text);
      std::istringstream in(read_file(trace_path));
      const SearchTrace trace = read_trace_csv(in);
      if (trace.records.empty()) throw ConfigError("trace has no iterations");
      const std::size_t m = trace.records.front().point.coords.size();
      const ParameterSpace space = make_space(m, ind_levels);
      const auto ordering = parse_ordering(ordering_text, m);
      std::vector<Block> blocks;
      std::vector<double> values;
      for (const auto& r : trace.records) {
        blocks.push_back(r.block);
        values.push_back(r.value);
      }
      const auto rows =
          compute_indicators(blocks, position_cardinalities(space, ordering), values, variants);
      write_file_atomic(out_path,
                        dump_to_string([&](std::ostream& s) { write_indicator_csv(s, rows, variants); }));
      return kOk;
    }
  } catch (const Error& e) {
    const int code = exit_code_for(e);
    report_error(err, e.kind(), code, e.what());
    return code;
  } catch (const std::filesystem::filesystem_error& e) {
    report_error(err, "io", kIo, e.what());
    return kIo;
  } catch (const std::exception& e) {
    report_error(err, "internal", kInternal, e.what());
    return kInternal;
  }
  report_error(err, "usage", kUsage, "no command given");
  return kUsage;
}

}  // namespace blockwake::cli
