#include "blockwake/engine.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <random>

#include "blockwake/error.hpp"
#include "blockwake/format.hpp"

namespace blockwake {

std::vector<std::size_t> identity_ordering(std::size_t m) {
  std::vector<std::size_t> out(m);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

void check_ordering(std::span<const std::size_t> ordering, std::size_t m) {
  if (ordering.size() != m) throw ConfigError("ordering length differs from parameter count");
  std::vector<bool> seen(m, false);
  for (auto p : ordering) {
    if (p >= m || seen[p]) throw ConfigError("ordering is not a permutation of [0, m)");
    seen[p] = true;
  }
}

namespace {

// Next odometer state, last digit fastest; false after the final state.
bool advance(std::vector<Level>& digits, const std::vector<std::size_t>& params,
             const ParameterSpace& space) {
  for (std::size_t i = params.size(); i-- > 0;) {
    if (++digits[i] < space.cardinality(params[i])) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

SearchTrace run_search(const ParameterSpace& space, const Landscape& landscape,
                       const SweepPlan& plan, std::span<const std::size_t> ordering,
                       const Point& init, MemoCache& cache) {
  const std::size_t m = space.size();
  if (plan.m != m)
    throw PlanError("plan built for m = " + std::to_string(plan.m) + " but space has " +
                    std::to_string(m) + " parameters");
  check_ordering(ordering, m);
  check_point(space, init);

  const std::size_t misses_before = cache.misses();
  SearchTrace trace;
  trace.plan_name = plan.label();
  trace.ordering.assign(ordering.begin(), ordering.end());
  trace.initial = init;
  trace.initial_value = evaluate(space, landscape, init, cache);

  Point current = init;
  double current_value = trace.initial_value;
  std::size_t iter = 0;
  std::vector<std::size_t> params;
  std::vector<Level> digits;

  for (std::size_t c = 0; c < plan.cycles.size(); ++c) {
    for (const Block& block : plan.cycles[c].blocks) {
      ++iter;
      if (block.empty()) throw PlanError("empty block at iteration " + std::to_string(iter));
      params.clear();
      for (auto pos : block) {
        if (pos >= m) throw PlanError("block position out of range at iteration " + std::to_string(iter));
        params.push_back(ordering[pos]);
      }

      // Ties go to the lexicographically smallest full point, whatever
      // order the ordering puts the block parameters in.
      digits.assign(params.size(), 0);
      Point candidate = current;
      Point best;
      double best_value = 0.0;
      bool have_best = false;
      do {
        for (std::size_t i = 0; i < params.size(); ++i) candidate.coords[params[i]] = digits[i];
        double v = 0.0;
        try {
          v = evaluate(space, landscape, candidate, cache);
        } catch (const EvaluationError& e) {
          throw EvaluationError(std::string(e.what()) + " (block " + std::to_string(iter) + ")");
        }
        if (!have_best || v < best_value || (v == best_value && candidate < best)) {
          best = candidate;
          best_value = v;
          have_best = true;
        }
      } while (advance(digits, params, space));
      current = std::move(best);
      current_value = best_value;
      trace.records.push_back(IterationRecord{c + 1, iter, block, current, current_value,
                                              cache.misses() - misses_before});
    }
  }
  return trace;
}

InitPolicy parse_init_policy(std::string_view text) {
  if (text == "fixed") return InitPolicy::fixed;
  if (text == "mid" || text == "mid-level") return InitPolicy::mid_level;
  if (text == "random" || text == "seeded-random") return InitPolicy::seeded_random;
  throw ConfigError("unknown init policy '" + std::string(text) + "'");
}

Point initial_point(const ParameterSpace& space, InitPolicy policy, std::uint64_t seed,
                    const std::optional<Point>& fixed_point) {
  Point p;
  p.coords.resize(space.size(), 0);
  switch (policy) {
    case InitPolicy::fixed:
      if (fixed_point) {
        check_point(space, *fixed_point);
        return *fixed_point;
      }
      break;
    case InitPolicy::mid_level:
      for (std::size_t i = 0; i < space.size(); ++i)
        p.coords[i] = static_cast<Level>((space.cardinality(i) - 1) / 2);
      break;
    case InitPolicy::seeded_random: {
      std::mt19937_64 rng(seed);
      for (std::size_t i = 0; i < space.size(); ++i) {
        std::uniform_int_distribution<Level> dist(0, static_cast<Level>(space.cardinality(i) - 1));
        p.coords[i] = dist(rng);
      }
      break;
    }
  }
  return p;
}

void write_trace_csv(std::ostream& out, const SearchTrace& trace) {
  out << "cycle,iter,block,point,f,evals_cum\n";
  for (const auto& r : trace.records) {
    out << r.cycle << ',' << r.iter << ',';
    for (std::size_t i = 0; i < r.block.size(); ++i) out << (i ? ";" : "") << r.block[i];
    out << ',' << format_point(r.point, ';') << ',' << format_double(r.value) << ','
        << r.evals_cum << '\n';
  }
}

SearchTrace read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty trace file", 0);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "cycle,iter,block,point,f,evals_cum")
    throw ParseError("unexpected trace header '" + line + "'", 0);
  SearchTrace trace;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto fields = parse_csv_line(line);
    if (fields.size() != 6) throw ParseError("trace row needs 6 fields", row);
    try {
      IterationRecord r;
      r.cycle = std::stoul(fields[0]);
      r.iter = std::stoul(fields[1]);
      for (const auto& b : split(fields[2], ';')) r.block.push_back(std::stoul(b));
      r.point = parse_point(fields[3], ';');
      r.value = std::stod(fields[4]);
      r.evals_cum = std::stoul(fields[5]);
      trace.records.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw ParseError("malformed trace row", row);
    }
  }
  return trace;
}

}  // namespace blockwake
