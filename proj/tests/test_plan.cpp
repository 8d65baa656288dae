#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "blockwake/error.hpp"
#include "blockwake/plan.hpp"

using namespace blockwake;

namespace {

Block range(std::size_t lo, std::size_t hi) {
  Block b;
  for (auto i = lo; i <= hi; ++i) b.push_back(i);
  return b;
}

std::size_t shared(const Block& a, const Block& b) {
  Block out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.size();
}

// Random valid structure: sizes and overlaps drawn so that every pairing
// keeps its overlap below both adjacent sizes.
StructureSpec random_structure(std::mt19937_64& rng, std::size_t m) {
  std::uniform_int_distribution<std::size_t> count(1, 3);
  std::uniform_int_distribution<std::size_t> size(1, m);
  StructureSpec s;
  const auto ns = count(rng);
  for (std::size_t i = 0; i < ns; ++i) s.sizes.push_back(size(rng));
  const auto smallest = *std::min_element(s.sizes.begin(), s.sizes.end());
  std::uniform_int_distribution<std::size_t> overlap(0, smallest - 1);
  const auto no = count(rng);
  for (std::size_t i = 0; i < no; ++i) s.overlaps.push_back(overlap(rng));
  s.truncated = false;
  return s;
}

}  // namespace

TEST_CASE("structure names parse") {
  CHECK(parse_structure_name("B7-O6") == StructureSpec{{7}, {6}, false});
  CHECK(parse_structure_name("B6,8,6-O5") == StructureSpec{{6, 8, 6}, {5}, false});
  CHECK(parse_structure_name("B4-O3,1,3") == StructureSpec{{4}, {3, 1, 3}, false});
  CHECK(parse_structure_name("T-B4-O1") == StructureSpec{{4}, {1}, true});
  CHECK_THROWS_AS(parse_structure_name("B3-O3"), ValidationError);
  CHECK_THROWS_AS(parse_structure_name("B5-O5"), ValidationError);
  CHECK_THROWS_AS(parse_structure_name("B0-O0"), ValidationError);
}

TEST_CASE("malformed names report a position") {
  for (const char* bad : {"", "B", "B-O1", "B5O1", "B5-", "B5-O", "X5-O1", "B5,-O1", "B5-O1x",
                          "T-", "T-B5", "B5-O1,", "B 5-O1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_structure_name(bad), ParseError);
  }
  try {
    parse_structure_name("B5-Q1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);  // where "-O" was expected
  }
}

TEST_CASE("reference names round-trip") {
  const auto& names = reference_structure_names();
  CHECK(names.size() == 25);
  for (const auto& name : names) {
    CAPTURE(name);
    CHECK(render_structure_name(parse_structure_name(name)) == name);
  }
}

TEST_CASE("random structures round-trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto s = random_structure(rng, 12);
    s.truncated = i % 2 == 0;
    const auto text = render_structure_name(s);
    CAPTURE(text);
    CHECK(parse_structure_name(text) == s);
  }
}

TEST_CASE("cycle expansion examples") {
  const auto b5o0 = expand_cycle(parse_structure_name("B5-O0"), 10, 0, Verse::forward);
  CHECK(b5o0 == std::vector<Block>{range(0, 4), range(5, 9)});

  const auto b5o4 = expand_cycle(parse_structure_name("B5-O4"), 10, 0, Verse::forward);
  REQUIRE(b5o4.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(b5o4[i] == range(i, i + 4));

  const auto b2o1 = expand_cycle(parse_structure_name("B2-O1"), 4, 0, Verse::forward);
  CHECK(b2o1 == std::vector<Block>{{0, 1}, {1, 2}, {2, 3}});

  auto full = expand_cycle(parse_structure_name("B5-O3"), 10, 0, Verse::forward);
  const auto trunc = expand_cycle(parse_structure_name("T-B5-O3"), 10, 0, Verse::forward);
  full.pop_back();
  CHECK(trunc == full);

  // Reverse verse walks backwards; members stay ascending.
  const auto rev = expand_cycle(parse_structure_name("B3-O1"), 6, 0, Verse::reverse);
  CHECK(rev == std::vector<Block>{{0, 4, 5}, {2, 3, 4}, {0, 1, 2}});
}

TEST_CASE("expansion errors") {
  CHECK_THROWS_AS(expand_cycle(parse_structure_name("B2-O1"), 1, 0, Verse::forward), PlanError);
  CHECK_THROWS_AS(assemble_plan(parse_structure_name("B2-O1"), 1, 1, Recombination::none),
                  PlanError);
  // A lone block that already covers everything leaves nothing after truncation.
  CHECK_THROWS_AS(expand_cycle(parse_structure_name("T-B4-O1"), 4, 0, Verse::forward), PlanError);
}

TEST_CASE("expansion properties over random structures") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> mdist(1, 12);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t m = mdist(rng);
    const auto spec = random_structure(rng, m);
    std::uniform_int_distribution<std::size_t> odist(0, m - 1);
    const std::size_t offset = odist(rng);
    const Verse verse = trial % 2 == 0 ? Verse::forward : Verse::reverse;
    CAPTURE(render_structure_name(spec));
    CAPTURE(m);
    CAPTURE(offset);
    const auto blocks = expand_cycle(spec, m, offset, verse);
    REQUIRE_FALSE(blocks.empty());

    // Coverage, and minimality: dropping the last block loses a position.
    std::set<std::size_t> covered, before_last;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      CHECK(std::is_sorted(blocks[i].begin(), blocks[i].end()));
      CHECK(blocks[i].size() == std::min(spec.size_at(i), m));
      for (auto p : blocks[i]) {
        CHECK(p < m);
        covered.insert(p);
        if (i + 1 < blocks.size()) before_last.insert(p);
      }
    }
    CHECK(covered.size() == m);
    CHECK(before_last.size() < m);

    // Scheduled overlap between neighbours whenever the pair does not wrap
    // onto itself.
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
      if (spec.size_at(i) + spec.size_at(i + 1) - spec.overlap_at(i) <= m)
        CHECK(shared(blocks[i], blocks[i + 1]) == spec.overlap_at(i));
    }

    // Circularity: offset o equals offset 0 rotated by o.
    const auto base = expand_cycle(spec, m, 0, verse);
    REQUIRE(base.size() == blocks.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      Block rotated;
      for (auto p : base[i]) rotated.push_back((p + offset) % m);
      std::sort(rotated.begin(), rotated.end());
      CHECK(rotated == blocks[i]);
    }
  }
}

TEST_CASE("recombination schedules") {
  const auto offsets = [](Recombination kind, std::size_t m, std::size_t n) {
    std::vector<std::size_t> out;
    for (const auto& s : build_recombination_schedule(kind, m, n)) out.push_back(s.offset);
    return out;
  };
  CHECK(offsets(Recombination::A, 10, 10) == std::vector<std::size_t>{0, 9, 5, 4, 7, 6, 2, 1, 3, 8});
  CHECK(offsets(Recombination::B, 10, 10) == std::vector<std::size_t>{0, 5, 7, 2, 9, 4, 8, 3, 6, 1});
  CHECK(canonical_schedule(Recombination::A, 10));
  CHECK_FALSE(canonical_schedule(Recombination::A, 8));

  for (auto kind : {Recombination::A, Recombination::B}) {
    const auto s = build_recombination_schedule(kind, 10, 35);
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i] == s[i % 10]);
      CHECK(s[i].verse == (i % 2 == 0 ? Verse::forward : Verse::reverse));
    }
  }
  for (std::size_t m : {1, 3, 7, 10}) {
    for (const auto& s : build_recombination_schedule(Recombination::none, m, 5)) {
      CHECK(s.offset == 0);
      CHECK(s.verse == Verse::forward);
    }
  }
}

TEST_CASE("greedy offsets visit every position once per period") {
  CHECK(generic_recombination_offsets(8) == std::vector<std::size_t>{0, 4, 2, 6, 1, 3, 5, 7});
  for (std::size_t m = 1; m <= 16; ++m) {
    auto offs = generic_recombination_offsets(m);
    CHECK(offs.size() == m);
    CHECK(offs.front() == 0);
    std::sort(offs.begin(), offs.end());
    for (std::size_t i = 0; i < m; ++i) CHECK(offs[i] == i);
  }
}

TEST_CASE("plan assembly") {
  const auto one = assemble_plan(parse_structure_name("B5-O0"), 10, 1, Recombination::none);
  CHECK(one.block_count() == 2);
  CHECK(one.label() == "B5-O0-n-1c");

  const auto three = assemble_plan(parse_structure_name("B5-O0"), 10, 3, Recombination::A);
  REQUIRE(three.cycles.size() == 3);
  CHECK(three.block_count() == 6);
  CHECK(three.cycles[0].offset == 0);
  CHECK(three.cycles[1].offset == 9);
  CHECK(three.cycles[2].offset == 5);
  CHECK(three.cycles[0].verse == Verse::forward);
  CHECK(three.cycles[1].verse == Verse::reverse);
  CHECK(three.cycles[2].verse == Verse::forward);
  CHECK(three.block_cycles() == std::vector<std::size_t>{0, 0, 1, 1, 2, 2});

  const auto json = plan_to_json(one);
  CHECK(json.find("\"blocks\":[[0,1,2,3,4],[5,6,7,8,9]]") != std::string::npos);
}

TEST_CASE("recombination parsing") {
  CHECK(parse_recombination("none") == Recombination::none);
  CHECK(parse_recombination("a") == Recombination::A);
  CHECK(parse_recombination("B") == Recombination::B);
  CHECK_THROWS_AS(parse_recombination("C"), ConfigError);
}
