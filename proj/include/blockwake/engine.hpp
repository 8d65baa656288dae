#pragma once

// Overlapping block coordinate descent over a SweepPlan.
//
// Plan blocks hold positions on the circular list; `ordering[p]` is the
// parameter sitting at position p for this run. Each block is searched
// exhaustively with every other parameter frozen, and the block argmin
// becomes the new iterate (Gauss-Seidel order).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blockwake/plan.hpp"
#include "blockwake/space.hpp"

namespace blockwake {

struct IterationRecord {
  std::size_t cycle = 0;  // 1-based
  std::size_t iter = 0;   // 1-based, global across cycles
  Block block;            // positions
  Point point;            // iterate after the block search
  double value = 0.0;
  std::size_t evals_cum = 0;  // landscape invocations so far in this run
};

struct SearchTrace {
  std::string plan_name;
  std::vector<std::size_t> ordering;
  std::uint64_t seed = 0;
  Point initial;
  double initial_value = 0.0;
  std::vector<IterationRecord> records;

  double final_value() const { return records.empty() ? initial_value : records.back().value; }
};

SearchTrace run_search(const ParameterSpace& space, const Landscape& landscape,
                       const SweepPlan& plan, std::span<const std::size_t> ordering,
                       const Point& init, MemoCache& cache);

enum class InitPolicy { fixed, mid_level, seeded_random };

InitPolicy parse_init_policy(std::string_view text);

// `fixed` uses `fixed_point` when given, all zeros otherwise.
Point initial_point(const ParameterSpace& space, InitPolicy policy, std::uint64_t seed = 0,
                    const std::optional<Point>& fixed_point = std::nullopt);

std::vector<std::size_t> identity_ordering(std::size_t m);
void check_ordering(std::span<const std::size_t> ordering, std::size_t m);

// Columns `cycle,iter,block,point,f,evals_cum`; block and point use ';'.
void write_trace_csv(std::ostream& out, const SearchTrace& trace);
SearchTrace read_trace_csv(std::istream& in);

}  // namespace blockwake
