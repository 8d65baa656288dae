#pragma once

// Search-structure names, circular block expansion and recombination
// schedules.
//
// A structure name reads `[T-]B<sizes>-O<overlaps>`, e.g. "B7-O6",
// "B6,8,6-O5", "T-B4-O1". Block sizes and overlaps are cycled when the
// expansion needs more entries than the lists hold. Blocks are laid on a
// circular list of m positions; a cycle is the shortest run of blocks that
// touches every position (minus its last block when truncated).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace blockwake {

struct StructureSpec {
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> overlaps;
  bool truncated = false;

  std::size_t size_at(std::size_t block) const { return sizes[block % sizes.size()]; }
  std::size_t overlap_at(std::size_t block) const { return overlaps[block % overlaps.size()]; }
  std::size_t max_size() const;

  friend bool operator==(const StructureSpec&, const StructureSpec&) = default;
};

// Throws ParseError on malformed text, ValidationError when some
// donor/receiver pairing has an overlap not smaller than both block sizes.
StructureSpec parse_structure_name(std::string_view name);
std::string render_structure_name(const StructureSpec& spec);
void validate_structure(const StructureSpec& spec);

enum class Verse { forward, reverse };
enum class Recombination { none, A, B };

const char* to_string(Verse v);
const char* to_string(Recombination r);
Recombination parse_recombination(std::string_view text);

// Members are positions on the circular list, ascending.
using Block = std::vector<std::size_t>;

std::vector<Block> expand_cycle(const StructureSpec& spec, std::size_t m, std::size_t start_offset,
                                Verse verse);

struct CycleStart {
  std::size_t offset = 0;
  Verse verse = Verse::forward;

  friend bool operator==(const CycleStart&, const CycleStart&) = default;
};

// For m = 10 the A/B offsets are fixed lists. Other m use the greedy
// midpoint-of-largest-unvisited-gap rule (see generic_recombination_offsets).
std::vector<CycleStart> build_recombination_schedule(Recombination kind, std::size_t m,
                                                     std::size_t n_cycles);

// One full period of the greedy rule: start at 0, then repeatedly take the
// floor midpoint of the largest circular gap between offsets already used.
std::vector<std::size_t> generic_recombination_offsets(std::size_t m);

// True when the schedule for (kind, m) is a fixed list rather than the
// greedy rule.
bool canonical_schedule(Recombination kind, std::size_t m);

struct Cycle {
  std::size_t offset = 0;
  Verse verse = Verse::forward;
  std::vector<Block> blocks;
};

struct SweepPlan {
  std::string name;
  StructureSpec structure;
  std::size_t m = 0;
  Recombination recombination = Recombination::none;
  std::vector<Cycle> cycles;

  std::size_t block_count() const;
  std::vector<Block> flat_blocks() const;
  // Cycle index (0-based) of every flat block.
  std::vector<std::size_t> block_cycles() const;
  // "B5-O0-B-3c" style label used in reports.
  std::string label() const;
};

SweepPlan assemble_plan(const StructureSpec& spec, std::size_t m, std::size_t n_cycles,
                        Recombination kind);

// {name, m, recomb, cycles:[{offset, verse, blocks:[[int]]}]}
std::string plan_to_json(const SweepPlan& plan);

// The 25 built-in structure names used by the default experiment.
const std::vector<std::string>& reference_structure_names();

}  // namespace blockwake
