#include "blockwake/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "blockwake/error.hpp"
#include "blockwake/format.hpp"

namespace blockwake {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double log_mean_exp(const std::vector<double>& logs) {
  if (logs.empty()) return kNaN;
  const double hi = *std::max_element(logs.begin(), logs.end());
  if (std::isinf(hi)) return hi;
  double sum = 0.0;
  for (double v : logs) sum += std::exp(v - hi);
  return hi + std::log(sum / static_cast<double>(logs.size()));
}

std::optional<double> mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return std::nullopt;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

nlohmann::ordered_json opt_json(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) {
    if (v && std::isinf(*v)) return *v > 0 ? "inf" : "-inf";
    return nullptr;
  }
  return *v;
}

}  // namespace

std::size_t Histogram::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

double Histogram::bin_lo(std::size_t i) const {
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(counts.size());
}

double Histogram::bin_hi(std::size_t i) const {
  return i + 1 == counts.size() ? hi : bin_lo(i + 1);
}

Histogram make_histogram(std::span<const double> values, std::size_t bins, double lo, double hi) {
  if (bins < 1) throw ConfigError("histogram needs at least one bin");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  if (!(hi > lo)) bins = 1;
  h.counts.assign(bins, 0);
  for (double v : values) {
    if (!std::isfinite(v)) continue;
    std::size_t b = 0;
    if (bins > 1) {
      const double t = (v - lo) / (hi - lo) * static_cast<double>(bins);
      b = t <= 0.0 ? 0 : std::min(bins - 1, static_cast<std::size_t>(t));
    }
    ++h.counts[b];
  }
  return h;
}

Histogram make_histogram(std::span<const double> values, std::size_t bins) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : values) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (lo > hi) lo = hi = 0.0;
  return make_histogram(values, bins, lo, hi);
}

void write_histogram_csv(std::ostream& out, const Histogram& hist) {
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t i = 0; i < hist.counts.size(); ++i)
    out << format_double(hist.bin_lo(i)) << ',' << format_double(hist.bin_hi(i)) << ','
        << hist.counts[i] << '\n';
}

BruteForceResult brute_force(const ParameterSpace& space, const Landscape& landscape,
                             std::uint64_t budget, std::size_t bins) {
  const mpz_class total = space.total_size();
  if (total > budget)
    throw BudgetError("brute force needs " + total.get_str() + " evaluations, budget is " +
                      std::to_string(budget));
  BruteForceResult out;
  std::vector<double> values;
  values.reserve(total.get_ui());
  const bool bi = landscape.kind() == ObjectiveKind::bi_objective;
  const double inf = std::numeric_limits<double>::infinity();
  if (bi) out.raw_bounds.assign(2, Bounds{inf, -inf});
  for_each_point(space, [&](const Point& p) {
    const double v = landscape.value(p);
    ++out.evaluations;
    if (!std::isfinite(v))
      throw EvaluationError("landscape returned a non-finite value at point " + format_point(p));
    if (values.empty() || v < out.minimum) {
      out.minimum = v;
      out.argmin = p;
    }
    if (values.empty() || v > out.maximum) {
      out.maximum = v;
      out.argmax = p;
    }
    values.push_back(v);
    if (bi) {
      const auto r = landscape.raw(p);
      for (std::size_t i = 0; i < 2; ++i) {
        out.raw_bounds[i].min = std::min(out.raw_bounds[i].min, r[i]);
        out.raw_bounds[i].max = std::max(out.raw_bounds[i].max, r[i]);
      }
    }
  });
  if (!bi) out.raw_bounds = {Bounds{out.minimum, out.maximum}};
  out.bounds = {out.minimum, out.maximum};
  out.histogram = make_histogram(values, bins, out.minimum, out.maximum);
  return out;
}

std::vector<std::vector<std::size_t>> random_orderings(std::size_t m, std::size_t count,
                                                       std::uint64_t seed) {
  if (count < 1) throw ConfigError("ordering count must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto order = identity_ordering(m);
    std::shuffle(order.begin(), order.end(), rng);
    out.push_back(std::move(order));
  }
  return out;
}

PlanEntry parse_plan_entry(std::string_view line) {
  const std::string text = trim(line);
  const auto last = text.rfind(',');
  const auto middle = last == std::string::npos || last == 0 ? std::string::npos : text.rfind(',', last - 1);
  if (middle == std::string::npos)
    throw ConfigError("plan entry '" + text + "' must read name,cycles,recomb");
  PlanEntry e;
  e.name = trim(text.substr(0, middle));
  const std::string cycles = trim(text.substr(middle + 1, last - middle - 1));
  try {
    std::size_t used = 0;
    const long long c = std::stoll(cycles, &used);
    if (used != cycles.size() || c < 1) throw std::invalid_argument(cycles);
    e.cycles = static_cast<std::size_t>(c);
  } catch (const std::logic_error&) {
    throw ConfigError("plan entry '" + text + "' has an invalid cycle count");
  }
  e.recombination = parse_recombination(trim(text.substr(last + 1)));
  return e;
}

std::vector<PlanEntry> read_plan_manifest(std::istream& in) {
  std::vector<PlanEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(parse_plan_entry(t));
  }
  if (out.empty()) throw ConfigError("plan manifest is empty");
  return out;
}

std::vector<PlanEntry> default_plan_manifest() {
  std::vector<PlanEntry> out;
  for (const auto& name : reference_structure_names()) out.push_back({name, 1, Recombination::none});
  for (const auto& name : reference_structure_names())
    for (auto r : {Recombination::none, Recombination::A, Recombination::B})
      out.push_back({name, 6, r});
  return out;
}

namespace {

struct CellResult {
  bool ok = false;
  std::string error;
  std::vector<double> f;
  std::vector<double> se_log;  // NaN when undefined
  std::vector<double> evals;
  std::vector<double> nsm;     // defined values only
  FinalIndicators final_indicators;
  std::vector<IndicatorRow> rows;  // kept for the first ordering only
};

CellResult run_cell(const ParameterSpace& space, const Landscape& landscape,
                    const SweepPlan& plan, std::span<const std::size_t> ordering,
                    const Point& init, const IndicatorVariants& variants, bool keep_rows) {
  CellResult cell;
  try {
    MemoCache cache;
    const SearchTrace trace = run_search(space, landscape, plan, ordering, init, cache);
    IndicatorAccumulator acc(position_cardinalities(space, ordering), trace.records.size(),
                             variants);
    for (const auto& r : trace.records) {
      const auto& row = acc.push(r.block, r.value);
      cell.f.push_back(r.value);
      cell.se_log.push_back(row.se_log.value_or(kNaN));
      cell.evals.push_back(static_cast<double>(r.evals_cum));
      if (row.nsm) cell.nsm.push_back(*row.nsm);
    }
    const IndicatorRow& last = acc.rows().back();
    auto& fi = cell.final_indicators;
    fi.log_nss = log_of(last.nss);
    fi.gcr = last.gcr;
    fi.log_cv = log_of(last.cv);
    fi.log_cf = last.log_cf;
    fi.log_ccf = last.log_ccf;
    fi.fsw = last.fsw;
    fi.nsm = last.nsm;
    fi.urr = last.urr;
    fi.log_iruif = last.log_iruif;
    if (keep_rows) cell.rows = acc.rows();
    cell.ok = true;
  } catch (const Error& e) {
    cell.error = std::string(e.kind()) + ": " + e.what();
  }
  return cell;
}

std::optional<double> average(const std::vector<const CellResult*>& cells,
                              std::optional<double> FinalIndicators::*field) {
  std::vector<double> xs;
  for (const auto* c : cells)
    if (auto v = c->final_indicators.*field) xs.push_back(*v);
  return mean_of(xs);
}

}  // namespace

ExperimentReport run_experiment(const ParameterSpace& space, const Landscape& landscape,
                                std::span<const PlanEntry> plans,
                                std::span<const std::vector<std::size_t>> orderings,
                                const ExperimentConfig& config) {
  if (plans.empty()) throw ConfigError("experiment needs at least one plan");
  if (orderings.empty()) throw ConfigError("experiment needs at least one ordering");
  for (const auto& o : orderings) check_ordering(o, space.size());

  ExperimentReport report;
  report.landscape = landscape.describe();
  report.cardinalities = space.cardinalities();
  report.orderings = orderings.size();
  report.seed = config.seed;
  report.variants = config.variants;
  switch (config.init) {
    case InitPolicy::fixed: report.init = "fixed"; break;
    case InitPolicy::mid_level: report.init = "mid"; break;
    case InitPolicy::seeded_random: report.init = "random"; break;
  }

  std::vector<SweepPlan> built;
  for (const auto& e : plans)
    built.push_back(assemble_plan(parse_structure_name(e.name), space.size(), e.cycles, e.recombination));
  const Point init = initial_point(space, config.init, config.seed, config.fixed_init);

  const std::size_t n_cells = plans.size() * orderings.size();
  std::vector<CellResult> cells(n_cells);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n_cells; i = next++) {
      const std::size_t p = i / orderings.size();
      const std::size_t o = i % orderings.size();
      cells[i] = run_cell(space, landscape, built[p], orderings[o], init, config.variants, o == 0);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(config.jobs, n_cells));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Deterministic reduction in (plan, ordering) order.
  for (std::size_t p = 0; p < plans.size(); ++p) {
    PlanResult res;
    res.entry = plans[p];
    res.plan = built[p];
    res.label = built[p].label();
    const std::size_t K = built[p].block_count();
    std::vector<const CellResult*> done;
    std::vector<double> all_nsm;
    for (std::size_t o = 0; o < orderings.size(); ++o) {
      const CellResult& c = cells[p * orderings.size() + o];
      if (!c.ok) {
        res.failures.push_back("ordering " + std::to_string(o) + ": " + c.error);
        res.final_values.push_back(kNaN);
        continue;
      }
      if (res.indicators.empty() && !c.rows.empty()) res.indicators = c.rows;
      done.push_back(&c);
      res.final_values.push_back(c.f.back());
      all_nsm.insert(all_nsm.end(), c.nsm.begin(), c.nsm.end());
    }
    if (res.indicators.empty() && !done.empty()) {
      // The first ordering failed; recompute rows from the first completed one.
      const std::size_t o = static_cast<std::size_t>(
          std::find_if(cells.begin() + static_cast<std::ptrdiff_t>(p * orderings.size()), cells.end(),
                       [](const CellResult& c) { return c.ok; }) -
          (cells.begin() + static_cast<std::ptrdiff_t>(p * orderings.size())));
      res.indicators =
          run_cell(space, landscape, built[p], orderings[o], init, config.variants, true).rows;
    }
    res.completed = done.size();
    res.mean_nsm = mean_of(all_nsm);

    for (std::size_t k = 0; k < K && !done.empty(); ++k) {
      IterationMean im;
      im.iter = k + 1;
      im.samples = done.size();
      std::vector<double> fs, sq, se, ev;
      for (const auto* c : done) {
        fs.push_back(c->f[k]);
        if (c->f[k] > 0.0) sq.push_back(1.0 / c->f[k]);
        if (!std::isnan(c->se_log[k])) se.push_back(c->se_log[k]);
        ev.push_back(c->evals[k]);
      }
      im.mean_f = *mean_of(fs);
      im.mean_sq_max = mean_of(sq);
      if (!se.empty()) im.log_mean_se = log_mean_exp(se);
      im.mean_evals = *mean_of(ev);
      res.means.push_back(im);
    }
    if (!res.means.empty()) {
      res.mean_final_sq_max = res.means.back().mean_sq_max;
      res.log_mean_final_se = res.means.back().log_mean_se;
    }

    auto& fi = res.final_indicators;
    fi.log_nss = average(done, &FinalIndicators::log_nss);
    fi.gcr = average(done, &FinalIndicators::gcr);
    fi.log_cv = average(done, &FinalIndicators::log_cv);
    fi.log_cf = average(done, &FinalIndicators::log_cf);
    fi.log_ccf = average(done, &FinalIndicators::log_ccf);
    fi.fsw = average(done, &FinalIndicators::fsw);
    fi.nsm = average(done, &FinalIndicators::nsm);
    fi.urr = average(done, &FinalIndicators::urr);
    fi.log_iruif = average(done, &FinalIndicators::log_iruif);
    report.plans.push_back(std::move(res));
  }

  // Final-value histograms share one range so plans are comparable.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& r : report.plans)
    for (double v : r.final_values)
      if (std::isfinite(v)) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
  if (lo > hi) lo = hi = 0.0;
  for (auto& r : report.plans) r.histogram = make_histogram(r.final_values, config.bins, lo, hi);

  report.correlations = correlate(report);
  report.comparisons = compare_recombination(report);
  return report;
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ConfigError("correlated series differ in length");
  const std::size_t n = x.size();
  if (n < 3) return std::nullopt;
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  // Relative guard: a constant series with rounding noise still has no variance.
  const double scale_x = std::max(1.0, mx * mx) * static_cast<double>(n);
  const double scale_y = std::max(1.0, my * my) * static_cast<double>(n);
  if (sxx <= 1e-24 * scale_x || syy <= 1e-24 * scale_y) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<CorrelationRow> correlate(const ExperimentReport& report) {
  struct Column {
    const char* name;
    std::optional<double> FinalIndicators::*field;
  };
  static constexpr Column kColumns[] = {
      {"NSS", &FinalIndicators::log_nss}, {"GCR", &FinalIndicators::gcr},
      {"CV", &FinalIndicators::log_cv},   {"CF", &FinalIndicators::log_cf},
      {"CCF", &FinalIndicators::log_ccf}, {"FSW", &FinalIndicators::fsw},
      {"NSM", &FinalIndicators::nsm},     {"URR", &FinalIndicators::urr},
      {"IRUIF", &FinalIndicators::log_iruif}};

  auto finite = [](const std::optional<double>& v) { return v && std::isfinite(*v); };
  std::vector<CorrelationRow> out;
  for (const auto& col : kColumns) {
    CorrelationRow row;
    row.indicator = col.name;
    std::vector<double> xq, yq, xe, ye;
    for (const auto& plan : report.plans) {
      const auto& x = plan.final_indicators.*col.field;
      if (!finite(x)) continue;
      if (plan.mean_final_sq_max && *plan.mean_final_sq_max > 0.0) {
        xq.push_back(*x);
        yq.push_back(std::log(*plan.mean_final_sq_max));
      }
      if (finite(plan.log_mean_final_se)) {
        xe.push_back(*x);
        ye.push_back(*plan.log_mean_final_se);
      }
    }
    row.samples = xq.size();
    row.r_quality = pearson(xq, yq);
    row.r_efficiency = pearson(xe, ye);
    out.push_back(std::move(row));
  }
  return out;
}

double sign_test(std::size_t wins, std::size_t losses) {
  const std::size_t n = wins + losses;
  if (n == 0) return 1.0;
  const std::size_t k = std::min(wins, losses);
  const double log_half_n = static_cast<double>(n) * std::log(0.5);
  double tail = 0.0;
  for (std::size_t i = 0; i <= k; ++i) {
    const double log_binom = std::lgamma(static_cast<double>(n) + 1.0) -
                             std::lgamma(static_cast<double>(i) + 1.0) -
                             std::lgamma(static_cast<double>(n - i) + 1.0);
    tail += std::exp(log_binom + log_half_n);
  }
  return std::min(1.0, 2.0 * tail);
}

std::vector<Comparison> compare_recombination(const ExperimentReport& report) {
  std::vector<Comparison> out;
  for (const auto& base : report.plans) {
    if (base.entry.recombination != Recombination::none) continue;
    for (const auto& other : report.plans) {
      if (other.entry.recombination == Recombination::none) continue;
      if (other.plan.name != base.plan.name || other.entry.cycles != base.entry.cycles) continue;
      Comparison c;
      c.baseline = base.label;
      c.recombined = other.label;
      c.baseline_mean_sq_max = base.mean_final_sq_max;
      c.recombined_mean_sq_max = other.mean_final_sq_max;
      c.baseline_mean_nsm = base.mean_nsm;
      c.recombined_mean_nsm = other.mean_nsm;
      for (std::size_t o = 0; o < base.final_values.size(); ++o) {
        const double a = base.final_values[o];
        const double b = other.final_values[o];
        if (std::isnan(a) || std::isnan(b)) continue;
        if (b < a) ++c.wins;
        else if (b > a) ++c.losses;
        else ++c.ties;
      }
      c.sign_test_p = sign_test(c.wins, c.losses);
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::string plan_file_stem(const std::string& label) {
  std::string out = label;
  std::replace(out.begin(), out.end(), ',', '_');
  return out;
}

void write_report(const ExperimentReport& report, const std::filesystem::path& dir) {
  using json = nlohmann::ordered_json;
  OutputSet files(dir);
  json j;
  j["landscape"] = report.landscape;
  j["levels"] = report.cardinalities;
  j["orderings"] = report.orderings;
  j["seed"] = report.seed;
  j["init"] = report.init;
  j["variant_flags"] = report.variants.flags();
  j["plans"] = json::array();
  for (const auto& p : report.plans) {
    json pj;
    pj["label"] = p.label;
    pj["name"] = p.plan.name;
    pj["cycles"] = p.entry.cycles;
    pj["recomb"] = to_string(p.entry.recombination);
    pj["canonical_offsets"] = canonical_schedule(p.entry.recombination, p.plan.m);
    pj["blocks"] = p.plan.block_count();
    pj["completed"] = p.completed;
    pj["failures"] = p.failures;
    std::vector<double> finite_finals;
    for (double v : p.final_values)
      if (std::isfinite(v)) finite_finals.push_back(v);
    pj["mean_final_f"] = opt_json(mean_of(finite_finals));
    pj["mean_final_SQ_max"] = opt_json(p.mean_final_sq_max);
    pj["log_mean_final_SE"] = opt_json(p.log_mean_final_se);
    pj["mean_NSM"] = opt_json(p.mean_nsm);
    const auto& fi = p.final_indicators;
    pj["final_indicators"] = {{"logNSS", opt_json(fi.log_nss)}, {"GCR", opt_json(fi.gcr)},
                              {"logCV", opt_json(fi.log_cv)},   {"logCF", opt_json(fi.log_cf)},
                              {"logCCF", opt_json(fi.log_ccf)}, {"FSW", opt_json(fi.fsw)},
                              {"NSM", opt_json(fi.nsm)},        {"URR", opt_json(fi.urr)},
                              {"logIRUIF", opt_json(fi.log_iruif)}};
    j["plans"].push_back(std::move(pj));

    const std::string stem = plan_file_stem(p.label);
    std::ostringstream means, quality, efficiency, hist, ind;
    means << "iter,samples,mean_SQ_min,mean_SQ_max,log_mean_SQ_max,log_mean_SE,mean_evals_cum\n";
    quality << "iter,log_SQ\n";
    efficiency << "iter,log_SE\n";
    for (const auto& m : p.means) {
      std::optional<double> log_sq;
      if (m.mean_sq_max && *m.mean_sq_max > 0.0) log_sq = std::log(*m.mean_sq_max);
      means << m.iter << ',' << m.samples << ',' << format_double(m.mean_f) << ','
            << format_optional(m.mean_sq_max) << ',' << format_optional(log_sq) << ','
            << format_optional(m.log_mean_se) << ',' << format_double(m.mean_evals) << '\n';
      if (log_sq) quality << m.iter << ',' << format_double(*log_sq) << '\n';
      if (m.log_mean_se) efficiency << m.iter << ',' << format_double(*m.log_mean_se) << '\n';
    }
    write_histogram_csv(hist, p.histogram);
    write_indicator_csv(ind, p.indicators, report.variants);
    files.add("means_" + stem + ".csv", means.str());
    files.add("quality_" + stem + ".csv", quality.str());
    files.add("efficiency_" + stem + ".csv", efficiency.str());
    files.add("hist_" + stem + ".csv", hist.str());
    files.add("indicators_" + stem + ".csv", ind.str());
  }

  std::ostringstream corr;
  corr << "indicator,samples,r_SQ,r_SE\n";
  j["correlations"] = json::array();
  for (const auto& c : report.correlations) {
    corr << c.indicator << ',' << c.samples << ',' << format_optional(c.r_quality) << ','
         << format_optional(c.r_efficiency) << '\n';
    j["correlations"].push_back({{"indicator", c.indicator},
                                 {"samples", c.samples},
                                 {"r_SQ", opt_json(c.r_quality)},
                                 {"r_SE", opt_json(c.r_efficiency)}});
  }
  files.add("correlations.csv", corr.str());

  std::ostringstream comp;
  comp << "baseline,recombined,baseline_mean_SQ_max,recombined_mean_SQ_max,baseline_mean_NSM,"
          "recombined_mean_NSM,wins,losses,ties,sign_test_p\n";
  j["comparisons"] = json::array();
  for (const auto& c : report.comparisons) {
    comp << '"' << c.baseline << "\",\"" << c.recombined << "\","
         << format_optional(c.baseline_mean_sq_max) << ','
         << format_optional(c.recombined_mean_sq_max) << ','
         << format_optional(c.baseline_mean_nsm) << ',' << format_optional(c.recombined_mean_nsm)
         << ',' << c.wins << ',' << c.losses << ',' << c.ties << ','
         << format_double(c.sign_test_p) << '\n';
    j["comparisons"].push_back({{"baseline", c.baseline},
                                {"recombined", c.recombined},
                                {"baseline_mean_SQ_max", opt_json(c.baseline_mean_sq_max)},
                                {"recombined_mean_SQ_max", opt_json(c.recombined_mean_sq_max)},
                                {"baseline_mean_NSM", opt_json(c.baseline_mean_nsm)},
                                {"recombined_mean_NSM", opt_json(c.recombined_mean_nsm)},
                                {"wins", c.wins},
                                {"losses", c.losses},
                                {"ties", c.ties},
                                {"sign_test_p", c.sign_test_p}});
  }
  files.add("comparisons.csv", comp.str());
  files.add("report.json", j.dump(2) + "\n");
  files.commit();
}

}  // namespace blockwake
