#pragma once

// Parameter grids, points, the objective contract and the memo cache.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace blockwake {

using Level = std::uint32_t;

struct Parameter {
  std::size_t id = 0;
  std::string name;
  std::vector<std::string> levels;

  std::size_t cardinality() const { return levels.size(); }
};

class ParameterSpace {
 public:
  explicit ParameterSpace(std::vector<Parameter> params);

  // m parameters named p0..p{m-1}, each with `levels` levels labelled 0..n-1.
  static ParameterSpace uniform(std::size_t m, std::size_t levels);
  static ParameterSpace from_cardinalities(const std::vector<std::size_t>& cards);

  std::size_t size() const { return params_.size(); }
  const Parameter& operator[](std::size_t i) const { return params_[i]; }
  const std::vector<Parameter>& params() const { return params_; }
  std::size_t cardinality(std::size_t i) const { return params_[i].cardinality(); }
  std::vector<std::size_t> cardinalities() const;

  // Exact product of all cardinalities.
  mpz_class total_size() const;

 private:
  std::vector<Parameter> params_;
};

struct Point {
  std::vector<Level> coords;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

// Calls fn(point) for every grid point in lexicographic order (last
// coordinate fastest).
template <class Fn>
void for_each_point(const ParameterSpace& space, Fn&& fn) {
  Point p;
  p.coords.assign(space.size(), 0);
  while (true) {
    fn(static_cast<const Point&>(p));
    std::size_t i = space.size();
    while (i > 0) {
      --i;
      if (++p.coords[i] < space.cardinality(i)) break;
      p.coords[i] = 0;
      if (i == 0) return;
    }
  }
}

// Throws DomainError when the point does not belong to the space.
void check_point(const ParameterSpace& space, const Point& point);

// "0,2,1"
std::string format_point(const Point& point, char sep = ',');
Point parse_point(std::string_view text, char sep = ',');

// 0-1 scaling bounds for one raw objective.
struct Bounds {
  double min = 0.0;
  double max = 1.0;
};

enum class ObjectiveKind { single, bi_objective };

struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::single;
  std::vector<Bounds> bounds;
  std::vector<double> weights{0.5, 0.5};

  // Throws ConfigError on degenerate bounds or weights.
  void validate() const;
};

struct CombinedValue {
  double value = 0.0;
  bool clamped = false;
};

// Weighted sum of the 0-1 scaled raw objectives. Raw values outside their
// bounds are clamped and the clamp is reported.
CombinedValue combine_bi_objective(double f1, double f2, const ObjectiveSpec& spec);

// Deterministic black-box objective over a ParameterSpace.
class Landscape {
 public:
  virtual ~Landscape() = default;

  virtual double value(const Point& point) const = 0;
  virtual std::string describe() const = 0;
  virtual ObjectiveKind kind() const { return ObjectiveKind::single; }

  // Raw objectives of a bi-objective landscape; single objectives return {value}.
  virtual std::vector<double> raw(const Point& point) const { return {value(point)}; }

  // Analytic bounds of value() when the landscape knows them.
  virtual std::optional<Bounds> bounds() const { return std::nullopt; }
};

// Memoized evaluation store. Entries are never evicted; a nonzero capacity
// turns insertions past the limit into BudgetError.
class MemoCache {
 public:
  explicit MemoCache(std::size_t capacity = 0) : capacity_(capacity) {}

  std::optional<double> lookup(const Point& point);
  void insert(const Point& point, double value);

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  std::size_t requests() const { return hits_ + misses_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t capacity() const { return capacity_; }

  // CSV with header `coords,value`, rows sorted by coordinates.
  void dump_csv(std::ostream& out) const;

 private:
  std::unordered_map<Point, double, PointHash> entries_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
  std::size_t capacity_ = 0;
};

// Returns the memoized value, invoking the landscape only on first request.
double evaluate(const ParameterSpace& space, const Landscape& landscape, const Point& point,
                MemoCache& cache);

}  // namespace blockwake
