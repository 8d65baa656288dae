#include "blockwake/space.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <set>

#include "blockwake/error.hpp"
#include "blockwake/format.hpp"

namespace blockwake {

ParameterSpace::ParameterSpace(std::vector<Parameter> params) : params_(std::move(params)) {
  if (params_.empty()) throw ConfigError("parameter space needs at least one parameter");
  for (std::size_t i = 0; i < params_.size(); ++i) {
    auto& p = params_[i];
    p.id = i;
    if (p.levels.empty())
      throw ConfigError("parameter '" + p.name + "' has no levels");
    std::set<std::string> seen(p.levels.begin(), p.levels.end());
    if (seen.size() != p.levels.size())
      throw ConfigError("parameter '" + p.name + "' has duplicate level labels");
  }
}

ParameterSpace ParameterSpace::uniform(std::size_t m, std::size_t levels) {
  return from_cardinalities(std::vector<std::size_t>(m, levels));
}

ParameterSpace ParameterSpace::from_cardinalities(const std::vector<std::size_t>& cards) {
  std::vector<Parameter> params;
  params.reserve(cards.size());
  for (std::size_t i = 0; i < cards.size(); ++i) {
    Parameter p;
    p.id = i;
    p.name = "p" + std::to_string(i);
    for (std::size_t l = 0; l < cards[i]; ++l) p.levels.push_back(std::to_string(l));
    params.push_back(std::move(p));
  }
  return ParameterSpace(std::move(params));
}

std::vector<std::size_t> ParameterSpace::cardinalities() const {
  std::vector<std::size_t> out;
  out.reserve(params_.size());
  for (const auto& p : params_) out.push_back(p.cardinality());
  return out;
}

mpz_class ParameterSpace::total_size() const {
  mpz_class total = 1;
  for (const auto& p : params_) total *= static_cast<unsigned long>(p.cardinality());
  return total;
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  // FNV-1a over the coordinates.
  std::uint64_t h = 1469598103934665603ULL;
  for (Level c : p.coords) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

void check_point(const ParameterSpace& space, const Point& point) {
  if (point.coords.size() != space.size())
    throw DomainError("point has " + std::to_string(point.coords.size()) +
                      " coordinates, space has " + std::to_string(space.size()));
  for (std::size_t i = 0; i < point.coords.size(); ++i) {
    if (point.coords[i] >= space.cardinality(i))
      throw DomainError("coordinate " + std::to_string(i) + " = " +
                        std::to_string(point.coords[i]) + " out of range [0," +
                        std::to_string(space.cardinality(i)) + ")");
  }
}

std::string format_point(const Point& point, char sep) {
  std::string out;
  for (std::size_t i = 0; i < point.coords.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(point.coords[i]);
  }
  return out;
}

Point parse_point(std::string_view text, char sep) {
  Point p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(sep, pos);
    if (end == std::string_view::npos) end = text.size();
    auto field = text.substr(pos, end - pos);
    Level v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
      throw ParseError("invalid point coordinate '" + std::string(field) + "'", pos);
    p.coords.push_back(v);
    pos = end + 1;
  }
  return p;
}

void ObjectiveSpec::validate() const {
  const std::size_t n = kind == ObjectiveKind::single ? 1 : 2;
  if (bounds.size() != n)
    throw ConfigError("objective spec needs " + std::to_string(n) + " bounds");
  for (const auto& b : bounds) {
    if (!std::isfinite(b.min) || !std::isfinite(b.max) || !(b.max > b.min))
      throw ConfigError("degenerate objective bounds: max must exceed min");
  }
  if (kind == ObjectiveKind::bi_objective) {
    if (weights.size() != 2 || weights[0] < 0 || weights[1] < 0 ||
        std::abs(weights[0] + weights[1] - 1.0) > 1e-12)
      throw ConfigError("bi-objective weights must be two non-negative values summing to 1");
  }
}

CombinedValue combine_bi_objective(double f1, double f2, const ObjectiveSpec& spec) {
  if (spec.kind != ObjectiveKind::bi_objective)
    throw ConfigError("combine_bi_objective needs a bi-objective spec");
  spec.validate();
  CombinedValue out;
  auto scaled = [&](double f, const Bounds& b) {
    double s = (f - b.min) / (b.max - b.min);
    if (s < 0.0 || s > 1.0) {
      out.clamped = true;
      s = std::clamp(s, 0.0, 1.0);
    }
    return s;
  };
  out.value = spec.weights[0] * scaled(f1, spec.bounds[0]) +
              spec.weights[1] * scaled(f2, spec.bounds[1]);
  out.value = std::clamp(out.value, 0.0, 1.0);
  return out;
}

std::optional<double> MemoCache::lookup(const Point& point) {
  auto it = entries_.find(point);
  if (it == entries_.end()) return std::nullopt;
  ++hits_;
  return it->second;
}

void MemoCache::insert(const Point& point, double value) {
  if (capacity_ != 0 && entries_.size() >= capacity_)
    throw BudgetError("memo cache capacity " + std::to_string(capacity_) + " exhausted");
  if (entries_.emplace(point, value).second) ++misses_;
}

void MemoCache::dump_csv(std::ostream& out) const {
  std::vector<std::pair<Point, double>> rows(entries_.begin(), entries_.end());
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out << "coords,value\n";
  for (const auto& [p, v] : rows) out << '"' << format_point(p) << "\"," << format_double(v) << '\n';
}

double evaluate(const ParameterSpace& space, const Landscape& landscape, const Point& point,
                MemoCache& cache) {
  check_point(space, point);
  if (auto hit = cache.lookup(point)) return *hit;
  const double v = landscape.value(point);
  if (!std::isfinite(v))
    throw EvaluationError("landscape returned a non-finite value at point " + format_point(point));
  cache.insert(point, v);
  return v;
}

}  // namespace blockwake
