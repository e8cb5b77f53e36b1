#pragma once

#include <gridhilbert/numeric.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gridhilbert {

/// A point of a uniform grid. The same vector doubles as a monomial exponent
/// and as a multiset a : [n] -> N. Ordering is lexicographic with coordinate 1
/// most significant, which is the order used everywhere in the library.
class GridPoint {
 public:
  GridPoint() = default;
  explicit GridPoint(std::vector<int> coords) : coords_(std::move(coords)) {}
  GridPoint(std::initializer_list<int> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;

 private:
  std::vector<int> coords_;
};

/// wt(x) = sum of coordinates.
int weight(const GridPoint& point);

/// Componentwise order a <= b.
bool dominated_by(const GridPoint& a, const GridPoint& b);

std::string to_string(const GridPoint& point);

/// [0,k_1-1] x ... x [0,k_n-1] with every k_i >= 2.
class UniformGrid {
 public:
  /// Throws EmptyArities / AritySmallerThanTwo.
  explicit UniformGrid(std::vector<int> arities);

  const std::vector<int>& arities() const noexcept { return arities_; }
  std::size_t dimension() const noexcept { return arities_.size(); }
  int arity(std::size_t i) const { return arities_[i]; }
  int max_arity() const noexcept { return max_arity_; }
  /// N = sum (k_i - 1).
  int max_weight() const noexcept { return max_weight_; }
  std::size_t point_count() const noexcept { return point_count_; }

  bool contains(const GridPoint& point) const noexcept;
  /// Throws PointNotInGrid.
  void require_contains(const GridPoint& point) const;
  /// Throws DegreeOutOfRange unless 0 <= d <= N.
  void require_degree(int degree) const;

  /// Comma-separated arities, e.g. "3,3".
  std::string spec() const;

  friend bool operator==(const UniformGrid& a, const UniformGrid& b) {
    return a.arities_ == b.arities_;
  }

 private:
  std::vector<int> arities_;
  int max_arity_ = 0;
  int max_weight_ = 0;
  std::size_t point_count_ = 0;
};

UniformGrid make_grid(std::vector<int> arities);

/// A subset E of [0,N]; identifies the weight-determined set of all points
/// whose weight lies in E. Members are kept sorted and duplicate-free.
class WeightSet {
 public:
  WeightSet() = default;
  WeightSet(std::initializer_list<int> members);
  /// Sorts and removes duplicates; negative members throw WeightOutOfRange.
  explicit WeightSet(std::vector<int> members);

  /// [lo, hi]; empty when lo > hi.
  static WeightSet interval(int lo, int hi);
  /// Bit j set <=> j is a member. Only for N < 64.
  static WeightSet from_mask(std::uint64_t mask);
  std::uint64_t mask() const;

  const std::vector<int>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(int j) const;
  int min() const { return members_.front(); }
  int max() const { return members_.back(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool is_subset_of(const WeightSet& other) const;
  WeightSet united(const WeightSet& other) const;
  WeightSet intersected(const WeightSet& other) const;
  WeightSet without(const WeightSet& other) const;

  /// Throws WeightOutOfRange if a member exceeds max_weight.
  void require_within(int max_weight) const;

  friend bool operator==(const WeightSet&, const WeightSet&) = default;

 private:
  std::vector<int> members_;
};

/// Compact form with dash-ranges, e.g. "0,2-4,7"; empty set renders as "".
std::string to_string(const WeightSet& set);

/// sizes[j] = number of grid points of weight j, j in [0,N].
class LayerSizeTable {
 public:
  explicit LayerSizeTable(std::vector<BigInt> sizes) : sizes_(std::move(sizes)) {}

  const BigInt& operator[](int j) const { return sizes_.at(static_cast<std::size_t>(j)); }
  int max_weight() const noexcept { return static_cast<int>(sizes_.size()) - 1; }
  const std::vector<BigInt>& sizes() const noexcept { return sizes_; }
  BigInt total() const;
  /// |E| as a point count: sum of sizes over E.
  BigInt count(const WeightSet& set) const;

 private:
  std::vector<BigInt> sizes_;
};

/// Coefficients of prod_i (1 + x + ... + x^{k_i-1}), by iterated convolution.
LayerSizeTable layer_sizes(const UniformGrid& grid);

/// All grid points in lex order.
std::vector<GridPoint> enumerate_points(const UniformGrid& grid);

/// Points of weight j in lex order. Throws WeightOutOfRange.
std::vector<GridPoint> enumerate_layer(const UniformGrid& grid, int j);

/// Concatenation of the layers of E, ascending weight then lex.
std::vector<GridPoint> unfold_weight_set(const UniformGrid& grid, const WeightSet& set);

/// lex-wt(a) = sum a_i K^{n-i}, K = max arity.
BigInt lex_weight(const UniformGrid& grid, const GridPoint& point);

/// Mixed-radix decrement/increment with coordinate 1 most significant.
std::optional<GridPoint> lex_predecessor(const UniformGrid& grid, const GridPoint& point);
std::optional<GridPoint> lex_successor(const UniformGrid& grid, const GridPoint& point);

/// Sizes nondecreasing up to floor(N/2) and nonincreasing after.
bool is_unimodal(const LayerSizeTable& sizes);

/// Strictly increasing up to floor(N/2), equal at floor/ceil, strictly
/// decreasing after.
bool is_su2(const UniformGrid& grid);
bool is_su2(const LayerSizeTable& sizes);

/// "3,3" -> grid. Throws ParseError, or the grid construction errors.
UniformGrid parse_grid(std::string_view text);
/// "0,2-4,7" -> {0,2,3,4,7}. Empty text is the empty set. Throws ParseError.
WeightSet parse_weight_set(std::string_view text);

}  // namespace gridhilbert
