#pragma once

// Brute-force oracle, shared random orderings, the plan x ordering
// experiment protocol and the indicator/quality correlation harness.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blockwake/engine.hpp"
#include "blockwake/indicators.hpp"
#include "blockwake/plan.hpp"
#include "blockwake/space.hpp"

namespace blockwake {

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::size_t> counts;

  std::size_t total() const;
  double bin_lo(std::size_t i) const;
  double bin_hi(std::size_t i) const;
};

// Equal-width bins over [lo, hi]; values equal to hi land in the last bin.
// A degenerate range collapses to a single bin.
Histogram make_histogram(std::span<const double> values, std::size_t bins, double lo, double hi);
Histogram make_histogram(std::span<const double> values, std::size_t bins);

// Columns bin_lo,bin_hi,count.
void write_histogram_csv(std::ostream& out, const Histogram& hist);

struct BruteForceResult {
  Point argmin;
  double minimum = 0.0;
  Point argmax;
  double maximum = 0.0;
  std::size_t evaluations = 0;
  Histogram histogram;
  // Observed range of value(), usable as 0-1 scaling bounds.
  Bounds bounds;
  // Observed range of each raw objective.
  std::vector<Bounds> raw_bounds;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

// Enumerates the whole grid. Ties resolve to the lexicographically smallest
// point. Throws BudgetError when the grid exceeds `budget` points.
BruteForceResult brute_force(const ParameterSpace& space, const Landscape& landscape,
                             std::uint64_t budget = kDefaultBudget, std::size_t bins = 20);

std::vector<std::vector<std::size_t>> random_orderings(std::size_t m, std::size_t count,
                                                       std::uint64_t seed);

// One `name,cycles,recomb` line of an experiment manifest. Structure names
// may contain commas; the last two fields are split from the right.
struct PlanEntry {
  std::string name;
  std::size_t cycles = 1;
  Recombination recombination = Recombination::none;
};

PlanEntry parse_plan_entry(std::string_view line);
// Blank lines and lines starting with '#' are skipped.
std::vector<PlanEntry> read_plan_manifest(std::istream& in);
// Mono-cycle runs of every reference structure, plus 6-cycle runs with no,
// A and B recombination.
std::vector<PlanEntry> default_plan_manifest();

struct ExperimentConfig {
  InitPolicy init = InitPolicy::mid_level;
  std::optional<Point> fixed_init;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::size_t bins = 20;
  IndicatorVariants variants;
};

// Indicators at the final iteration, size-like ones as logs.
struct FinalIndicators {
  std::optional<double> log_nss;
  std::optional<double> gcr;
  std::optional<double> log_cv;
  std::optional<double> log_cf;
  std::optional<double> log_ccf;
  std::optional<double> fsw;
  std::optional<double> nsm;
  std::optional<double> urr;
  std::optional<double> log_iruif;
};

struct IterationMean {
  std::size_t iter = 0;
  std::size_t samples = 0;
  double mean_f = 0.0;                   // mean SQ (minimization form)
  std::optional<double> mean_sq_max;     // mean of 1/f
  std::optional<double> log_mean_se;     // log of mean SQ_max/NSS
  double mean_evals = 0.0;
};

struct PlanResult {
  PlanEntry entry;
  SweepPlan plan;
  std::string label;
  std::size_t completed = 0;
  std::vector<std::string> failures;  // "ordering <i>: <kind>: <message>"
  std::vector<IterationMean> means;
  // Final objective per ordering; NaN for failed cells.
  std::vector<double> final_values;
  std::optional<double> mean_final_sq_max;
  std::optional<double> log_mean_final_se;
  std::optional<double> mean_nsm;  // over every defined NSM of every run
  FinalIndicators final_indicators;  // averaged over completed orderings
  std::vector<IndicatorRow> indicators;  // first completed ordering
  Histogram histogram;
};

struct CorrelationRow {
  std::string indicator;
  std::size_t samples = 0;
  std::optional<double> r_quality;
  std::optional<double> r_efficiency;
};

struct Comparison {
  std::string baseline;
  std::string recombined;
  std::optional<double> baseline_mean_sq_max;
  std::optional<double> recombined_mean_sq_max;
  std::optional<double> baseline_mean_nsm;
  std::optional<double> recombined_mean_nsm;
  std::size_t wins = 0;    // recombined final value strictly lower
  std::size_t losses = 0;
  std::size_t ties = 0;
  double sign_test_p = 1.0;
};

struct ExperimentReport {
  std::string landscape;
  std::vector<std::size_t> cardinalities;
  std::size_t orderings = 0;
  std::uint64_t seed = 0;
  std::string init;
  IndicatorVariants variants;
  std::vector<PlanResult> plans;
  std::vector<CorrelationRow> correlations;
  std::vector<Comparison> comparisons;
};

// Runs every (plan, ordering) cell with a fresh cache. Cell failures are
// recorded on the plan and do not stop the experiment. Plans that cannot be
// assembled for m throw before anything runs. Results do not depend on
// `config.jobs`.
ExperimentReport run_experiment(const ParameterSpace& space, const Landscape& landscape,
                                 std::span<const PlanEntry> plans,
                                 std::span<const std::vector<std::size_t>> orderings,
                                 const ExperimentConfig& config);

// Pearson coefficient; empty for fewer than 3 points or zero variance.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

// Final quality and efficiency (logs) against each indicator across plans.
// Pairs with a non-finite side are dropped.
std::vector<CorrelationRow> correlate(const ExperimentReport& report);

// Two-sided exact sign test p-value.
double sign_test(std::size_t wins, std::size_t losses);

// Baseline (no recombination) against each recombined run of the same
// structure and cycle count, paired by ordering.
std::vector<Comparison> compare_recombination(const ExperimentReport& report);

// report.json, means_<plan>.csv, hist_<plan>.csv, indicators_<plan>.csv,
// quality_<plan>.csv, efficiency_<plan>.csv, correlations.csv,
// comparisons.csv. Commas in plan labels become '_' in file names.
void write_report(const ExperimentReport& report, const std::filesystem::path& dir);
std::string plan_file_stem(const std::string& label);

}  // namespace blockwake
