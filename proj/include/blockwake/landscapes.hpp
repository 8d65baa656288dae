#pragma once

// Seedable synthetic objectives standing in for a simulator.
//
//   separable  1 + sum_i w_i (x_i - c_i)^2
//   trap       1 + sum over parameter groups of a deceptive cost that is 0
//              when the whole group sits on its target levels and otherwise
//              grows with the number of matches, plus small seeded noise
//   random     1 + U[0,1) hashed from (seed, point)
//   conflict   two raw objectives whose preferred levels disagree on
//              seeded parameter pairs, scaled to 0-1 and weighted 1:1
//
// Spec strings read `kind[:key=value[,key=value]]`, e.g. "trap:group=4".

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blockwake/space.hpp"

namespace blockwake {

struct LandscapeSpec {
  std::string kind;
  std::map<std::string, std::string> options;

  static LandscapeSpec parse(std::string_view text);
  std::string render() const;
};

// Stateless 64-bit mix of a seed and a point.
std::uint64_t hash_point(std::uint64_t seed, const Point& point);

class SeparableConvex final : public Landscape {
 public:
  SeparableConvex(const ParameterSpace& space, std::uint64_t seed);

  double value(const Point& point) const override;
  std::string describe() const override;
  std::optional<Bounds> bounds() const override { return bounds_; }

  const Point& minimizer() const { return centers_; }

 private:
  std::uint64_t seed_;
  Point centers_;
  std::vector<double> weights_;
  Bounds bounds_;
};

class TrapLandscape final : public Landscape {
 public:
  TrapLandscape(const ParameterSpace& space, std::uint64_t seed, std::size_t group_size = 3,
                double noise = 0.5);

  double value(const Point& point) const override;
  std::string describe() const override;
  std::optional<Bounds> bounds() const override { return bounds_; }

  // All parameters on their group targets.
  const Point& global_minimizer() const { return targets_; }
  const std::vector<std::vector<std::size_t>>& groups() const { return groups_; }

 private:
  std::uint64_t seed_;
  std::size_t group_size_;
  double noise_scale_;
  std::vector<std::vector<std::size_t>> groups_;
  Point targets_;
  Bounds bounds_;
};

class SeededRandom final : public Landscape {
 public:
  explicit SeededRandom(std::uint64_t seed) : seed_(seed) {}

  double value(const Point& point) const override;
  std::string describe() const override;
  std::optional<Bounds> bounds() const override { return Bounds{1.0, 2.0}; }

 private:
  std::uint64_t seed_;
};

class ConflictPair final : public Landscape {
 public:
  // `pairs` conflicting parameter pairs; clamped to floor(m/2).
  ConflictPair(const ParameterSpace& space, std::uint64_t seed, std::size_t pairs);

  double value(const Point& point) const override;
  std::string describe() const override;
  ObjectiveKind kind() const override { return ObjectiveKind::bi_objective; }
  std::vector<double> raw(const Point& point) const override;
  std::optional<Bounds> bounds() const override { return Bounds{0.0, 1.0}; }

  const ObjectiveSpec& objective() const { return objective_; }
  // Replaces the analytic raw bounds, e.g. with enumerated ones.
  void set_raw_bounds(const Bounds& first, const Bounds& second);
  const std::vector<std::pair<std::size_t, std::size_t>>& conflict_pairs() const { return pairs_; }

 private:
  std::uint64_t seed_;
  std::vector<Level> first_targets_;
  std::vector<Level> second_targets_;
  std::vector<bool> in_pair_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<double> pair_penalty_;
  ObjectiveSpec objective_;
};

// Builds a landscape from a spec string. `conflict:bounds=oracle` enumerates
// the raw objectives (within `budget` points) to fix the scaling bounds.
std::unique_ptr<Landscape> make_landscape(std::string_view spec, const ParameterSpace& space,
                                          std::uint64_t seed, std::uint64_t budget = 1'000'000);

}  // namespace blockwake
