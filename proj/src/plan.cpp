#include "blockwake/plan.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include <json.hpp>

#include "blockwake/error.hpp"

namespace blockwake {

std::size_t StructureSpec::max_size() const {
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

namespace {

class NameScanner {
 public:
  explicit NameScanner(std::string_view text) : text_(text) {}

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!consume(token)) throw ParseError("expected '" + std::string(token) + "'", pos_);
  }

  std::size_t integer() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", start);
    return value;
  }

  std::vector<std::size_t> integer_list() {
    std::vector<std::size_t> out{integer()};
    while (consume(",")) out.push_back(integer());
    return out;
  }

  bool done() const { return pos_ == text_.size(); }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

void validate_structure(const StructureSpec& spec) {
  if (spec.sizes.empty() || spec.overlaps.empty())
    throw ValidationError("structure needs at least one block size and one overlap");
  for (auto s : spec.sizes)
    if (s < 1) throw ValidationError("block sizes must be at least 1");
  // Every pairing that can occur while cycling both lists.
  const std::size_t period = std::lcm(spec.sizes.size(), spec.overlaps.size());
  for (std::size_t i = 0; i < period; ++i) {
    const std::size_t donor = spec.size_at(i);
    const std::size_t receiver = spec.size_at(i + 1);
    const std::size_t overlap = spec.overlap_at(i);
    if (overlap >= std::min(donor, receiver))
      throw ValidationError("overlap " + std::to_string(overlap) +
                            " must be smaller than adjacent block sizes " +
                            std::to_string(donor) + " and " + std::to_string(receiver));
  }
}

StructureSpec parse_structure_name(std::string_view name) {
  NameScanner scan(name);
  StructureSpec spec;
  spec.truncated = scan.consume("T-");
  scan.expect("B");
  spec.sizes = scan.integer_list();
  scan.expect("-O");
  spec.overlaps = scan.integer_list();
  if (!scan.done()) throw ParseError("unexpected trailing text", scan.position());
  validate_structure(spec);
  return spec;
}

std::string render_structure_name(const StructureSpec& spec) {
  return std::string(spec.truncated ? "T-" : "") + "B" + join(spec.sizes) + "-O" +
         join(spec.overlaps);
}

const char* to_string(Verse v) { return v == Verse::forward ? "forward" : "reverse"; }

const char* to_string(Recombination r) {
  switch (r) {
    case Recombination::none: return "none";
    case Recombination::A: return "A";
    case Recombination::B: return "B";
  }
  return "none";
}

Recombination parse_recombination(std::string_view text) {
  if (text == "none" || text == "n") return Recombination::none;
  if (text == "A" || text == "a") return Recombination::A;
  if (text == "B" || text == "b") return Recombination::B;
  throw ConfigError("unknown recombination kind '" + std::string(text) + "'");
}

std::vector<Block> expand_cycle(const StructureSpec& spec, std::size_t m, std::size_t start_offset,
                                Verse verse) {
  if (spec.sizes.empty() || spec.overlaps.empty()) throw PlanError("empty structure");
  if (m < spec.max_size())
    throw PlanError("parameter count " + std::to_string(m) + " is smaller than block size " +
                    std::to_string(spec.max_size()));
  std::vector<Block> blocks;
  std::vector<bool> covered(m, false);
  std::size_t uncovered = m;
  std::size_t start = start_offset % m;
  const std::size_t max_blocks = 2 * m + 2;
  for (std::size_t i = 0; uncovered > 0; ++i) {
    if (i >= max_blocks)
      throw PlanError("structure " + render_structure_name(spec) + " never covers all " +
                      std::to_string(m) + " positions");
    const std::size_t size = spec.size_at(i);
    Block block;
    block.reserve(size);
    for (std::size_t j = 0; j < size; ++j) {
      const std::size_t p = verse == Verse::forward ? (start + j) % m : (start + m - j) % m;
      block.push_back(p);
      if (!covered[p]) {
        covered[p] = true;
        --uncovered;
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
    if (uncovered == 0) break;
    const std::size_t overlap = spec.overlap_at(i);
    if (overlap >= size)
      throw PlanError("structure " + render_structure_name(spec) +
                      " does not advance: overlap equals block size");
    const std::size_t step = (size - overlap) % m;
    start = verse == Verse::forward ? (start + step) % m : (start + m - step) % m;
  }
  if (spec.truncated) {
    blocks.pop_back();
    if (blocks.empty())
      throw PlanError("truncated structure " + render_structure_name(spec) +
                      " leaves an empty cycle for m = " + std::to_string(m));
  }
  return blocks;
}

std::vector<std::size_t> generic_recombination_offsets(std::size_t m) {
  std::vector<std::size_t> used{0};
  while (used.size() < m) {
    std::vector<std::size_t> sorted = used;
    std::sort(sorted.begin(), sorted.end());
    std::size_t best_gap = 0;
    std::size_t best_mid = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const std::size_t a = sorted[i];
      const std::size_t b = i + 1 < sorted.size() ? sorted[i + 1] : sorted[0] + m;
      const std::size_t gap = b - a;
      if (gap > best_gap) {
        best_gap = gap;
        best_mid = (a + gap / 2) % m;
      }
    }
    if (best_gap < 2) break;
    used.push_back(best_mid);
  }
  return used;
}

bool canonical_schedule(Recombination kind, std::size_t m) {
  return kind == Recombination::none || m == 10;
}

std::vector<CycleStart> build_recombination_schedule(Recombination kind, std::size_t m,
                                                     std::size_t n_cycles) {
  if (n_cycles < 1) throw ConfigError("at least one cycle is required");
  if (m < 1) throw ConfigError("parameter count must be at least 1");
  std::vector<CycleStart> out;
  out.reserve(n_cycles);
  if (kind == Recombination::none) {
    out.assign(n_cycles, CycleStart{0, Verse::forward});
    return out;
  }
  static constexpr std::array<std::size_t, 10> kTypeA{0, 9, 5, 4, 7, 6, 2, 1, 3, 8};
  static constexpr std::array<std::size_t, 10> kTypeB{0, 5, 7, 2, 9, 4, 8, 3, 6, 1};
  std::vector<std::size_t> offsets;
  if (m == 10) {
    const auto& list = kind == Recombination::A ? kTypeA : kTypeB;
    offsets.assign(list.begin(), list.end());
  } else {
    offsets = generic_recombination_offsets(m);
  }
  for (std::size_t c = 0; c < n_cycles; ++c) {
    out.push_back({offsets[c % offsets.size()], c % 2 == 0 ? Verse::forward : Verse::reverse});
  }
  return out;
}

std::size_t SweepPlan::block_count() const {
  std::size_t n = 0;
  for (const auto& c : cycles) n += c.blocks.size();
  return n;
}

std::vector<Block> SweepPlan::flat_blocks() const {
  std::vector<Block> out;
  out.reserve(block_count());
  for (const auto& c : cycles) out.insert(out.end(), c.blocks.begin(), c.blocks.end());
  return out;
}

std::vector<std::size_t> SweepPlan::block_cycles() const {
  std::vector<std::size_t> out;
  out.reserve(block_count());
  for (std::size_t c = 0; c < cycles.size(); ++c) out.insert(out.end(), cycles[c].blocks.size(), c);
  return out;
}

std::string SweepPlan::label() const {
  const char* r = recombination == Recombination::none ? "n" : to_string(recombination);
  return name + "-" + r + "-" + std::to_string(cycles.size()) + "c";
}

SweepPlan assemble_plan(const StructureSpec& spec, std::size_t m, std::size_t n_cycles,
                        Recombination kind) {
  validate_structure(spec);
  if (m < spec.max_size())
    throw PlanError("parameter count " + std::to_string(m) + " is smaller than block size " +
                    std::to_string(spec.max_size()));
  SweepPlan plan;
  plan.name = render_structure_name(spec);
  plan.structure = spec;
  plan.m = m;
  plan.recombination = kind;
  for (const auto& start : build_recombination_schedule(kind, m, n_cycles)) {
    plan.cycles.push_back({start.offset, start.verse, expand_cycle(spec, m, start.offset, start.verse)});
  }
  return plan;
}

std::string plan_to_json(const SweepPlan& plan) {
  nlohmann::ordered_json j;
  j["name"] = plan.name;
  j["m"] = plan.m;
  j["recomb"] = to_string(plan.recombination);
  j["canonical_offsets"] = canonical_schedule(plan.recombination, plan.m);
  j["cycles"] = nlohmann::ordered_json::array();
  for (const auto& c : plan.cycles) {
    nlohmann::ordered_json cj;
    cj["offset"] = c.offset;
    cj["verse"] = to_string(c.verse);
    cj["blocks"] = c.blocks;
    j["cycles"].push_back(std::move(cj));
  }
  return j.dump();
}

const std::vector<std::string>& reference_structure_names() {
  static const std::vector<std::string> names{
      "B5-O4",   "B5-O3",   "B5-O2",   "B4-O2",      "B3-O2",      "B5-O1",     "B4-O1",
      "B3-O1",   "B2-O1",   "B5-O0",   "B3-O0",      "B2-O0",      "T-B5-O4",   "T-B5-O3",
      "T-B5-O2", "T-B4-O2", "T-B3-O2", "T-B4-O1",    "T-B3-O1",    "B7-O6",     "B6,8,6-O5",
      "B4-O3,1,3", "B5,2,5-O1", "B4,6,4-O2", "B3,4,3-O0"};
  return names;
}

}  // namespace blockwake
