#include <gridhilbert/errors.hpp>
#include <gridhilbert/grid.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace gridhilbert {

bool GridPoint::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

int weight(const GridPoint& point) {
  return std::accumulate(point.coords().begin(), point.coords().end(), 0);
}

bool dominated_by(const GridPoint& a, const GridPoint& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch, "points of different dimension");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::string to_string(const GridPoint& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(point[i]);
  }
  return out + ")";
}

UniformGrid::UniformGrid(std::vector<int> arities) : arities_(std::move(arities)) {
  if (arities_.empty()) throw Error(ErrorKind::EmptyArities, "a grid needs at least one coordinate");
  point_count_ = 1;
  for (std::size_t i = 0; i < arities_.size(); ++i) {
    if (arities_[i] < 2) {
      throw Error(ErrorKind::AritySmallerThanTwo,
                  "arity " + std::to_string(arities_[i]) + " at position " + std::to_string(i + 1));
    }
    max_weight_ += arities_[i] - 1;
    max_arity_ = std::max(max_arity_, arities_[i]);
    point_count_ *= static_cast<std::size_t>(arities_[i]);
  }
}

bool UniformGrid::contains(const GridPoint& point) const noexcept {
  if (point.size() != arities_.size()) return false;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i] < 0 || point[i] >= arities_[i]) return false;
  }
  return true;
}

void UniformGrid::require_contains(const GridPoint& point) const {
  if (!contains(point)) {
    throw Error(ErrorKind::PointNotInGrid, to_string(point) + " is not in grid " + spec());
  }
}

void UniformGrid::require_degree(int degree) const {
  if (degree < 0 || degree > max_weight_) {
    throw Error(ErrorKind::DegreeOutOfRange,
                "degree " + std::to_string(degree) + " outside [0," + std::to_string(max_weight_) + "]");
  }
}

std::string UniformGrid::spec() const {
  std::string out;
  for (std::size_t i = 0; i < arities_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(arities_[i]);
  }
  return out;
}

UniformGrid make_grid(std::vector<int> arities) { return UniformGrid(std::move(arities)); }

WeightSet::WeightSet(std::initializer_list<int> members) : WeightSet(std::vector<int>(members)) {}

WeightSet::WeightSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.front() < 0) {
    throw Error(ErrorKind::WeightOutOfRange, "negative weight " + std::to_string(members_.front()));
  }
}

WeightSet WeightSet::interval(int lo, int hi) {
  if (lo < 0 && lo <= hi) throw Error(ErrorKind::WeightOutOfRange, "negative weight " + std::to_string(lo));
  WeightSet out;
  for (int j = lo; j <= hi; ++j) out.members_.push_back(j);
  return out;
}

WeightSet WeightSet::from_mask(std::uint64_t mask) {
  WeightSet out;
  for (int j = 0; j < 64; ++j) {
    if ((mask >> j) & 1U) out.members_.push_back(j);
  }
  return out;
}

std::uint64_t WeightSet::mask() const {
  std::uint64_t out = 0;
  for (int j : members_) {
    if (j >= 64) throw Error(ErrorKind::WeightOutOfRange, "mask form needs weights below 64");
    out |= std::uint64_t{1} << j;
  }
  return out;
}

bool WeightSet::contains(int j) const { return std::binary_search(members_.begin(), members_.end(), j); }

bool WeightSet::is_subset_of(const WeightSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

WeightSet WeightSet::united(const WeightSet& other) const {
  WeightSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out.members_));
  return out;
}

WeightSet WeightSet::intersected(const WeightSet& other) const {
  WeightSet out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out.members_));
  return out;
}

WeightSet WeightSet::without(const WeightSet& other) const {
  WeightSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                      std::back_inserter(out.members_));
  return out;
}

void WeightSet::require_within(int max_weight) const {
  if (!members_.empty() && members_.back() > max_weight) {
    throw Error(ErrorKind::WeightOutOfRange,
                "weight " + std::to_string(members_.back()) + " outside [0," + std::to_string(max_weight) + "]");
  }
}

std::string to_string(const WeightSet& set) {
  std::string out;
  const auto& m = set.members();
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j + 1 < m.size() && m[j + 1] == m[j] + 1) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(m[i]);
    if (j > i) out += '-' + std::to_string(m[j]);
    i = j + 1;
  }
  return out;
}

BigInt LayerSizeTable::total() const {
  BigInt sum = 0;
  for (const auto& s : sizes_) sum += s;
  return sum;
}

BigInt LayerSizeTable::count(const WeightSet& set) const {
  BigInt sum = 0;
  for (int j : set) sum += (*this)[j];
  return sum;
}

LayerSizeTable layer_sizes(const UniformGrid& grid) {
  std::vector<BigInt> coeffs{1};
  for (int k : grid.arities()) {
    std::vector<BigInt> next(coeffs.size() + static_cast<std::size_t>(k) - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      for (int e = 0; e < k; ++e) next[i + static_cast<std::size_t>(e)] += coeffs[i];
    }
    coeffs = std::move(next);
  }
  return LayerSizeTable(std::move(coeffs));
}

namespace {

// Depth-first over coordinates, smallest value first, so output is lex.
void collect_layer(const UniformGrid& grid, std::size_t index, int remaining, std::vector<int>& prefix,
                   std::vector<int> const& tail_capacity, std::vector<GridPoint>& out) {
  if (index == grid.dimension()) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  const int hi = std::min(grid.arity(index) - 1, remaining);
  const int lo = std::max(0, remaining - tail_capacity[index + 1]);
  for (int v = lo; v <= hi; ++v) {
    prefix[index] = v;
    collect_layer(grid, index + 1, remaining - v, prefix, tail_capacity, out);
  }
}

}  // namespace

std::vector<GridPoint> enumerate_points(const UniformGrid& grid) {
  std::vector<GridPoint> out;
  out.reserve(grid.point_count());
  GridPoint p(std::vector<int>(grid.dimension(), 0));
  for (std::optional<GridPoint> cur = p; cur; cur = lex_successor(grid, *cur)) out.push_back(*cur);
  return out;
}

std::vector<GridPoint> enumerate_layer(const UniformGrid& grid, int j) {
  if (j < 0 || j > grid.max_weight()) {
    throw Error(ErrorKind::WeightOutOfRange,
                "layer " + std::to_string(j) + " outside [0," + std::to_string(grid.max_weight()) + "]");
  }
  // tail_capacity[i] = max weight reachable on coordinates i..n-1
  std::vector<int> tail_capacity(grid.dimension() + 1, 0);
  for (std::size_t i = grid.dimension(); i-- > 0;) tail_capacity[i] = tail_capacity[i + 1] + grid.arity(i) - 1;
  std::vector<GridPoint> out;
  std::vector<int> prefix(grid.dimension(), 0);
  collect_layer(grid, 0, j, prefix, tail_capacity, out);
  return out;
}

std::vector<GridPoint> unfold_weight_set(const UniformGrid& grid, const WeightSet& set) {
  set.require_within(grid.max_weight());
  std::vector<GridPoint> out;
  for (int j : set) {
    auto layer = enumerate_layer(grid, j);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

BigInt lex_weight(const UniformGrid& grid, const GridPoint& point) {
  grid.require_contains(point);
  BigInt value = 0;
  for (std::size_t i = 0; i < point.size(); ++i) {
    value *= grid.max_arity();
    value += point[i];
  }
  return value;
}

std::optional<GridPoint> lex_predecessor(const UniformGrid& grid, const GridPoint& point) {
  grid.require_contains(point);
  GridPoint out = point;
  for (std::size_t i = out.size(); i-- > 0;) {
    if (out[i] > 0) {
      --out[i];
      return out;
    }
    out[i] = grid.arity(i) - 1;
  }
  return std::nullopt;
}

std::optional<GridPoint> lex_successor(const UniformGrid& grid, const GridPoint& point) {
  grid.require_contains(point);
  GridPoint out = point;
  for (std::size_t i = out.size(); i-- > 0;) {
    if (out[i] + 1 < grid.arity(i)) {
      ++out[i];
      return out;
    }
    out[i] = 0;
  }
  return std::nullopt;
}

bool is_unimodal(const LayerSizeTable& sizes) {
  const int n = sizes.max_weight();
  for (int j = 0; j < n; ++j) {
    if (j < n / 2 && sizes[j] > sizes[j + 1]) return false;
    if (j >= n / 2 && sizes[j] < sizes[j + 1]) return false;
  }
  return true;
}

bool is_su2(const LayerSizeTable& sizes) {
  const int n = sizes.max_weight();
  const int lo = n / 2;
  const int hi = (n + 1) / 2;
  for (int j = 0; j < lo; ++j) {
    if (!(sizes[j] < sizes[j + 1])) return false;
  }
  if (sizes[lo] != sizes[hi]) return false;
  for (int j = hi; j < n; ++j) {
    if (!(sizes[j] > sizes[j + 1])) return false;
  }
  return true;
}

bool is_su2(const UniformGrid& grid) { return is_su2(layer_sizes(grid)); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, std::string_view context) {
  token = trim(token);
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw Error(ErrorKind::ParseError, "bad integer '" + std::string(token) + "' in " + std::string(context));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

UniformGrid parse_grid(std::string_view text) {
  std::vector<int> arities;
  for (auto token : split(trim(text), ',')) arities.push_back(parse_int(token, "grid"));
  return UniformGrid(std::move(arities));
}

WeightSet parse_weight_set(std::string_view text) {
  text = trim(text);
  std::vector<int> members;
  if (text.empty()) return WeightSet();
  for (auto token : split(text, ',')) {
    token = trim(token);
    const auto dash = token.find('-', 1);
    if (dash == std::string_view::npos) {
      members.push_back(parse_int(token, "weight set"));
      continue;
    }
    const int lo = parse_int(token.substr(0, dash), "weight set");
    const int hi = parse_int(token.substr(dash + 1), "weight set");
    if (lo > hi) throw Error(ErrorKind::ParseError, "empty range '" + std::string(token) + "'");
    for (int j = lo; j <= hi; ++j) members.push_back(j);
  }
  return WeightSet(std::move(members));
}

}  // namespace gridhilbert
