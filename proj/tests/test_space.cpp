#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "doctest.h"

#include "blockwake/error.hpp"
#include "blockwake/format.hpp"
#include "blockwake/landscapes.hpp"
#include "blockwake/space.hpp"

using namespace blockwake;

namespace {

class CountingLandscape : public Landscape {
 public:
  double value(const Point& p) const override {
    ++calls;
    double s = 1.0;
    for (auto c : p.coords) s += c;
    return s;
  }
  std::string describe() const override { return "counting"; }
  mutable std::size_t calls = 0;
};

class NanLandscape : public Landscape {
 public:
  double value(const Point&) const override { return std::nan(""); }
  std::string describe() const override { return "nan"; }
};

}  // namespace

TEST_CASE("space sizes") {
  CHECK(ParameterSpace::uniform(2, 3).total_size() == 9);
  CHECK(ParameterSpace::uniform(5, 3).total_size() == 243);
  CHECK(ParameterSpace::uniform(10, 3).total_size() == 59049);
  CHECK(ParameterSpace::from_cardinalities({2, 3, 4}).total_size() == 24);
  CHECK_THROWS_AS(ParameterSpace::uniform(0, 3), ConfigError);
  CHECK_THROWS_AS(ParameterSpace::uniform(2, 0), ConfigError);
}

TEST_CASE("points are checked against the grid") {
  const auto space = ParameterSpace::uniform(3, 3);
  CHECK_NOTHROW(check_point(space, Point{{0, 1, 2}}));
  CHECK_THROWS_AS(check_point(space, Point{{0, 3, 2}}), DomainError);
  CHECK_THROWS_AS(check_point(space, Point{{0, 1}}), DomainError);
  CHECK(format_point(Point{{0, 2, 1}}) == "0,2,1");
  CHECK(parse_point("0;2;1", ';') == Point{{0, 2, 1}});
}

TEST_CASE("for_each_point visits the grid in lexicographic order") {
  const auto space = ParameterSpace::from_cardinalities({2, 3});
  std::vector<Point> seen;
  for_each_point(space, [&](const Point& p) { seen.push_back(p); });
  REQUIRE(seen.size() == 6);
  CHECK(seen.front() == Point{{0, 0}});
  CHECK(seen[1] == Point{{0, 1}});
  CHECK(seen.back() == Point{{1, 2}});
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("memo cache counts misses once per distinct point") {
  const auto space = ParameterSpace::uniform(1, 3);
  CountingLandscape land;
  MemoCache cache;
  for (Level l = 0; l < 3; ++l) evaluate(space, land, Point{{l}}, cache);
  CHECK(cache.misses() == 3);
  CHECK(cache.size() == 3);
  evaluate(space, land, Point{{1}}, cache);
  CHECK(cache.misses() == 3);
  CHECK(cache.hits() == 1);
  CHECK(land.calls == 3);
}

TEST_CASE("memo cache over a 3^10 sweep") {
  const auto space = ParameterSpace::uniform(10, 3);
  CountingLandscape land;
  MemoCache cache;
  for_each_point(space, [&](const Point& p) { evaluate(space, land, p, cache); });
  CHECK(cache.misses() == 59049);
  CHECK(land.calls == 59049);
}

TEST_CASE("memo cache capacity refuses instead of evicting") {
  const auto space = ParameterSpace::uniform(1, 3);
  CountingLandscape land;
  MemoCache cache(2);
  evaluate(space, land, Point{{0}}, cache);
  evaluate(space, land, Point{{1}}, cache);
  CHECK_THROWS_AS(evaluate(space, land, Point{{2}}, cache), BudgetError);
  CHECK(cache.size() == 2);
}

TEST_CASE("evaluation errors") {
  const auto space = ParameterSpace::uniform(2, 3);
  NanLandscape land;
  MemoCache cache;
  CHECK_THROWS_AS(evaluate(space, land, Point{{0, 0}}, cache), EvaluationError);
  CountingLandscape ok;
  CHECK_THROWS_AS(evaluate(space, ok, Point{{0, 5}}, cache), DomainError);
}

TEST_CASE("cache dump is sorted") {
  const auto space = ParameterSpace::uniform(2, 2);
  CountingLandscape land;
  MemoCache cache;
  evaluate(space, land, Point{{1, 1}}, cache);
  evaluate(space, land, Point{{0, 1}}, cache);
  std::ostringstream out;
  cache.dump_csv(out);
  CHECK(out.str() == "coords,value\n\"0,1\",2\n\"1,1\",3\n");
}

TEST_CASE("bi-objective combination") {
  ObjectiveSpec spec;
  spec.kind = ObjectiveKind::bi_objective;
  spec.bounds = {{1.0, 3.0}, {10.0, 20.0}};
  CHECK(combine_bi_objective(1.0, 10.0, spec).value == doctest::Approx(0.0));
  CHECK(combine_bi_objective(3.0, 10.0, spec).value == doctest::Approx(0.5));
  CHECK(combine_bi_objective(2.0, 15.0, spec).value == doctest::Approx(0.5));
  const auto c = combine_bi_objective(5.0, 10.0, spec);
  CHECK(c.clamped);
  CHECK(c.value == doctest::Approx(0.5));

  // Monotone in each raw objective.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 25.0);
  for (int i = 0; i < 500; ++i) {
    const double a = u(rng), b = u(rng), d = std::abs(u(rng));
    CHECK(combine_bi_objective(a + d, b, spec).value >= combine_bi_objective(a, b, spec).value);
    CHECK(combine_bi_objective(a, b + d, spec).value >= combine_bi_objective(a, b, spec).value);
  }

  spec.bounds = {{1.0, 1.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(combine_bi_objective(1.0, 0.5, spec), ConfigError);
}

TEST_CASE("format helpers") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_optional(std::nullopt).empty());
  CHECK(log_of(mpz_class(0)) == -std::numeric_limits<double>::infinity());
  CHECK(log_of(mpz_class(59049)) == doctest::Approx(10 * std::log(3.0)));
  const auto f = parse_csv_line("a,\"1,2\",c");
  REQUIRE(f.size() == 3);
  CHECK(f[1] == "1,2");
}

TEST_CASE("landscape specs") {
  const auto space = ParameterSpace::uniform(6, 3);
  CHECK(LandscapeSpec::parse("trap:group=4").options.at("group") == "4");
  CHECK_THROWS_AS(make_landscape("volcano", space, 1), ConfigError);
  CHECK_THROWS_AS(make_landscape("trap:colour=red", space, 1), ConfigError);
  for (const char* spec : {"separable", "trap", "random", "conflict", "conflict:bounds=oracle"}) {
    const auto a = make_landscape(spec, space, 3);
    const auto b = make_landscape(spec, space, 3);
    for_each_point(space, [&](const Point& p) { CHECK(a->value(p) == b->value(p)); });
  }
}

TEST_CASE("conflict landscape stays in the unit interval") {
  const auto space = ParameterSpace::uniform(6, 3);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto land = make_landscape("conflict:bounds=oracle", space, seed);
    for_each_point(space, [&](const Point& p) {
      const double v = land->value(p);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    });
  }
}
