#include <gridhilbert/closure.hpp>
#include <gridhilbert/errors.hpp>
#include <gridhilbert/matrix.hpp>

#include <algorithm>

namespace gridhilbert {

namespace {

void require_degree(int max_weight, int degree) {
  if (degree < 0 || degree > max_weight) {
    throw Error(ErrorKind::DegreeOutOfRange,
                "degree " + std::to_string(degree) + " outside [0," + std::to_string(max_weight) + "]");
  }
}

}  // namespace

WeightSet l_step(int max_weight, int degree, const WeightSet& set) {
  require_degree(max_weight, degree);
  set.require_within(max_weight);
  const auto s = set.size();
  const auto d = static_cast<std::size_t>(degree);
  if (s <= d) return set;
  const auto& t = set.members();
  return WeightSet::interval(0, t[s - d - 1]).united(set).united(WeightSet::interval(t[d], max_weight));
}

LBar l_bar_iterate(int max_weight, int degree, const WeightSet& set) {
  LBar out{l_step(max_weight, degree, set), 0};
  WeightSet previous = set;
  while (!(out.closure == previous)) {
    ++out.iterations;
    previous = out.closure;
    out.closure = l_step(max_weight, degree, previous);
  }
  return out;
}

WeightSet l_bar(int max_weight, int degree, const WeightSet& set) {
  return l_bar_iterate(max_weight, degree, set).closure;
}

ZClosureEngine::ZClosureEngine(const UniformGrid& grid, int degree)
    : grid_(grid), degree_(degree), points_(enumerate_points(grid)) {
  grid.require_degree(degree);
  std::vector<GridPoint> monomials;
  for (const auto& p : points_) {
    if (weight(p) <= degree) monomials.push_back(p);
  }
  columns_.reserve(points_.size());
  for (const auto& x : points_) {
    std::vector<BigInt> column;
    column.reserve(monomials.size());
    for (const auto& alpha : monomials) column.push_back(falling_factorial_value(alpha, x));
    columns_.push_back(std::move(column));
  }
}

std::size_t ZClosureEngine::index_of(const GridPoint& point) const {
  grid_.require_contains(point);
  std::size_t index = 0;
  for (std::size_t i = 0; i < point.size(); ++i) {
    index = index * static_cast<std::size_t>(grid_.arity(i)) + static_cast<std::size_t>(point[i]);
  }
  return index;
}

std::vector<GridPoint> ZClosureEngine::closure_points(std::span<const GridPoint> points) const {
  const std::size_t length = columns_.front().size();
  SpanBuilder span(length);
  for (const auto& p : points) span.insert(columns_[index_of(p)]);
  std::vector<GridPoint> out;
  if (span.rank() == 0) return out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (span.contains(columns_[i])) out.push_back(points_[i]);
  }
  return out;
}

WeightSet ZClosureEngine::zstar(const WeightSet& set) const {
  const int n = grid_.max_weight();
  set.require_within(n);
  const std::size_t length = columns_.front().size();
  SpanBuilder span(length);
  std::vector<std::vector<std::size_t>> layers(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const int w = weight(points_[i]);
    layers[static_cast<std::size_t>(w)].push_back(i);
    if (set.contains(w)) span.insert(columns_[i]);
  }
  if (span.rank() == 0) return {};
  std::vector<int> out;
  for (int j = 0; j <= n; ++j) {
    if (set.contains(j)) {
      out.push_back(j);
      continue;
    }
    const auto& layer = layers[static_cast<std::size_t>(j)];
    if (std::all_of(layer.begin(), layer.end(), [&](std::size_t i) { return span.contains(columns_[i]); })) {
      out.push_back(j);
    }
  }
  return WeightSet(std::move(out));
}

std::vector<GridPoint> z_closure_points(const UniformGrid& grid, int degree, std::span<const GridPoint> points) {
  return ZClosureEngine(grid, degree).closure_points(points);
}

WeightSet zstar_closure(const UniformGrid& grid, int degree, const WeightSet& set) {
  return ZClosureEngine(grid, degree).zstar(set);
}

WeightSet t_set(int max_weight, int i) {
  if (i < 0 || i > max_weight) {
    throw Error(ErrorKind::WeightOutOfRange,
                "index " + std::to_string(i) + " outside [0," + std::to_string(max_weight) + "]");
  }
  if (i == 0) return {};
  return WeightSet::interval(0, i - 1).united(WeightSet::interval(max_weight - i + 1, max_weight));
}

ClosureReport closure_report(const UniformGrid& grid, int degree, const WeightSet& set) {
  const auto lbar = l_bar_iterate(grid.max_weight(), degree, set);
  return ClosureReport{set, lbar.closure, zstar_closure(grid, degree, set), lbar.iterations};
}

}  // namespace gridhilbert
