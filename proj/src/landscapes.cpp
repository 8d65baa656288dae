#include "blockwake/landscapes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "blockwake/error.hpp"
#include "blockwake/format.hpp"

namespace blockwake {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// [0, 1) from the top 53 bits.
double unit(std::uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

double max_sq_distance(Level target, std::size_t card) {
  const double d = std::max<double>(target, static_cast<double>(card - 1) - target);
  return d * d;
}

std::string seed_suffix(std::uint64_t seed) { return " seed=" + std::to_string(seed); }

std::size_t option_size(const LandscapeSpec& spec, const std::string& key, std::size_t fallback) {
  auto it = spec.options.find(key);
  if (it == spec.options.end()) return fallback;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(it->second, &used);
    if (used != it->second.size() || v < 0) throw std::invalid_argument(key);
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw ConfigError("landscape option " + key + " must be a non-negative integer");
  }
}

double option_double(const LandscapeSpec& spec, const std::string& key, double fallback) {
  auto it = spec.options.find(key);
  if (it == spec.options.end()) return fallback;
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size() || !std::isfinite(v)) throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    throw ConfigError("landscape option " + key + " must be a number");
  }
}

}  // namespace

LandscapeSpec LandscapeSpec::parse(std::string_view text) {
  LandscapeSpec spec;
  const auto colon = text.find(':');
  spec.kind = std::string(text.substr(0, colon));
  if (spec.kind.empty()) throw ConfigError("empty landscape kind");
  if (colon != std::string_view::npos) {
    for (const auto& item : split(text.substr(colon + 1), ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        throw ConfigError("landscape option '" + item + "' needs key=value");
      spec.options[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  return spec;
}

std::string LandscapeSpec::render() const {
  std::string out = kind;
  char sep = ':';
  for (const auto& [k, v] : options) {
    out += sep;
    out += k + "=" + v;
    sep = ',';
  }
  return out;
}

std::uint64_t hash_point(std::uint64_t seed, const Point& point) {
  std::uint64_t h = splitmix64(seed ^ 0x6a09e667f3bcc908ULL);
  for (Level c : point.coords) h = splitmix64(h ^ (static_cast<std::uint64_t>(c) + 0x100));
  return h;
}

SeparableConvex::SeparableConvex(const ParameterSpace& space, std::uint64_t seed) : seed_(seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(1.0, 2.0);
  double hi = 1.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    std::uniform_int_distribution<Level> level(0, static_cast<Level>(space.cardinality(i) - 1));
    centers_.coords.push_back(level(rng));
    weights_.push_back(weight(rng));
    hi += weights_.back() * max_sq_distance(centers_.coords.back(), space.cardinality(i));
  }
  bounds_ = {1.0, std::max(hi, 1.0 + 1e-9)};
}

double SeparableConvex::value(const Point& point) const {
  double f = 1.0;
  for (std::size_t i = 0; i < centers_.coords.size(); ++i) {
    const double d = static_cast<double>(point.coords[i]) - centers_.coords[i];
    f += weights_[i] * d * d;
  }
  return f;
}

std::string SeparableConvex::describe() const { return "separable" + seed_suffix(seed_); }

TrapLandscape::TrapLandscape(const ParameterSpace& space, std::uint64_t seed,
                             std::size_t group_size, double noise)
    : seed_(seed), group_size_(group_size), noise_scale_(noise) {
  if (group_size_ < 1) throw ConfigError("trap group size must be at least 1");
  if (!(noise_scale_ >= 0.0 && noise_scale_ < 1.0))
    throw ConfigError("trap noise must lie in [0, 1)");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> params(space.size());
  std::iota(params.begin(), params.end(), std::size_t{0});
  std::shuffle(params.begin(), params.end(), rng);
  for (std::size_t i = 0; i < params.size(); i += group_size_) {
    const auto end = std::min(params.size(), i + group_size_);
    groups_.emplace_back(params.begin() + static_cast<std::ptrdiff_t>(i),
                         params.begin() + static_cast<std::ptrdiff_t>(end));
  }
  targets_.coords.resize(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    std::uniform_int_distribution<Level> level(0, static_cast<Level>(space.cardinality(i) - 1));
    targets_.coords[i] = level(rng);
  }
  double hi = 1.0;
  for (const auto& g : groups_) hi += static_cast<double>(g.size()) / static_cast<double>(g.size() + 1);
  hi += noise_scale_ / static_cast<double>(group_size_ + 1);
  bounds_ = {1.0, hi};
}

double TrapLandscape::value(const Point& point) const {
  double f = 1.0;
  for (const auto& g : groups_) {
    std::size_t matches = 0;
    for (auto p : g) matches += point.coords[p] == targets_.coords[p];
    if (matches < g.size())
      f += static_cast<double>(matches + 1) / static_cast<double>(g.size() + 1);
  }
  // Noise stays below the smallest cost step, so the all-target point
  // remains the unique global minimum.
  f += noise_scale_ / static_cast<double>(group_size_ + 1) * unit(hash_point(seed_, point));
  return f;
}

std::string TrapLandscape::describe() const {
  return "trap:group=" + std::to_string(group_size_) + ",noise=" + format_double(noise_scale_) +
         seed_suffix(seed_);
}

double SeededRandom::value(const Point& point) const { return 1.0 + unit(hash_point(seed_, point)); }

std::string SeededRandom::describe() const { return "random" + seed_suffix(seed_); }

ConflictPair::ConflictPair(const ParameterSpace& space, std::uint64_t seed, std::size_t pairs)
    : seed_(seed) {
  const std::size_t m = space.size();
  std::mt19937_64 rng(seed);
  first_targets_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<Level> level(0, static_cast<Level>(space.cardinality(i) - 1));
    first_targets_[i] = level(rng);
  }
  second_targets_ = first_targets_;
  in_pair_.assign(m, false);

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < m; ++i)
    if (space.cardinality(i) > 1) candidates.push_back(i);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  pairs = std::min(pairs, candidates.size() / 2);
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t p = candidates[2 * k];
    const std::size_t q = candidates[2 * k + 1];
    for (auto i : {p, q}) {
      const auto card = static_cast<Level>(space.cardinality(i));
      std::uniform_int_distribution<Level> shift(1, card - 1);
      second_targets_[i] = (first_targets_[i] + shift(rng)) % card;
      in_pair_[i] = true;
    }
    pairs_.emplace_back(std::min(p, q), std::max(p, q));
    pair_penalty_.push_back(max_sq_distance(second_targets_[p], space.cardinality(p)) +
                            max_sq_distance(second_targets_[q], space.cardinality(q)) + 1.0);
  }

  double hi1 = 0.0;
  double hi2 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    hi1 += max_sq_distance(first_targets_[i], space.cardinality(i));
    if (!in_pair_[i]) hi2 += max_sq_distance(first_targets_[i], space.cardinality(i));
  }
  for (double pen : pair_penalty_) hi2 += pen;
  objective_.kind = ObjectiveKind::bi_objective;
  objective_.bounds = {Bounds{0.0, std::max(hi1, 1.0)}, Bounds{0.0, std::max(hi2, 1.0)}};
  objective_.validate();
}

std::vector<double> ConflictPair::raw(const Point& point) const {
  double f1 = 0.0;
  double f2 = 0.0;
  for (std::size_t i = 0; i < first_targets_.size(); ++i) {
    const double d = static_cast<double>(point.coords[i]) - first_targets_[i];
    f1 += d * d;
    if (!in_pair_[i]) f2 += d * d;
  }
  // The second objective rewards a conflicting pair only when both members
  // sit on its preferred levels at once.
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const auto [p, q] = pairs_[k];
    if (point.coords[p] != second_targets_[p] || point.coords[q] != second_targets_[q])
      f2 += pair_penalty_[k];
  }
  return {f1, f2};
}

double ConflictPair::value(const Point& point) const {
  const auto r = raw(point);
  return combine_bi_objective(r[0], r[1], objective_).value;
}

void ConflictPair::set_raw_bounds(const Bounds& first, const Bounds& second) {
  ObjectiveSpec next = objective_;
  next.bounds = {first, second};
  next.validate();
  objective_ = std::move(next);
}

std::string ConflictPair::describe() const {
  return "conflict:pairs=" + std::to_string(pairs_.size()) + seed_suffix(seed_);
}

std::unique_ptr<Landscape> make_landscape(std::string_view text, const ParameterSpace& space,
                                          std::uint64_t seed, std::uint64_t budget) {
  const LandscapeSpec spec = LandscapeSpec::parse(text);
  auto reject_unknown = [&](std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : spec.options) {
      if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }) ==
          allowed.end())
        throw ConfigError("unknown option '" + k + "' for landscape " + spec.kind);
    }
  };
  if (spec.kind == "separable" || spec.kind == "separable-convex") {
    reject_unknown({});
    return std::make_unique<SeparableConvex>(space, seed);
  }
  if (spec.kind == "trap") {
    reject_unknown({"group", "noise"});
    return std::make_unique<TrapLandscape>(space, seed, option_size(spec, "group", 3),
                                           option_double(spec, "noise", 0.5));
  }
  if (spec.kind == "random" || spec.kind == "seeded-random") {
    reject_unknown({});
    return std::make_unique<SeededRandom>(seed);
  }
  if (spec.kind == "conflict" || spec.kind == "conflict-pair") {
    reject_unknown({"pairs", "bounds"});
    auto land = std::make_unique<ConflictPair>(
        space, seed, option_size(spec, "pairs", std::max<std::size_t>(1, space.size() / 4)));
    auto it = spec.options.find("bounds");
    if (it != spec.options.end() && it->second == "oracle") {
      if (space.total_size() > budget)
        throw BudgetError("oracle bounds need " + space.total_size().get_str() +
                          " evaluations, budget is " + std::to_string(budget));
      Bounds b1{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
      Bounds b2 = b1;
      for_each_point(space, [&](const Point& p) {
        const auto r = land->raw(p);
        b1 = {std::min(b1.min, r[0]), std::max(b1.max, r[0])};
        b2 = {std::min(b2.min, r[1]), std::max(b2.max, r[1])};
      });
      land->set_raw_bounds(b1, b2);
    } else if (it != spec.options.end() && it->second != "analytic") {
      throw ConfigError("conflict bounds must be 'analytic' or 'oracle'");
    }
    return land;
  }
  throw ConfigError("unknown landscape kind '" + spec.kind + "'");
}

}  // namespace blockwake
