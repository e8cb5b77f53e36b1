#pragma once

#include <gridhilbert/grid.hpp>
#include <gridhilbert/numeric.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gridhilbert {

/// Dense matrix of rationals whose rows and columns are labeled by grid
/// points. Labels are duplicate-free on each axis.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  /// Zero matrix. Throws DuplicateLabel.
  ExactMatrix(std::vector<GridPoint> row_labels, std::vector<GridPoint> col_labels);

  /// Unlabeled convenience form: row i is labeled (i), column j is labeled (j).
  /// Entries are canonicalized. Throws DimensionMismatch on ragged rows.
  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static ExactMatrix identity(std::vector<GridPoint> labels);

  std::size_t rows() const noexcept { return row_labels_.size(); }
  std::size_t cols() const noexcept { return col_labels_.size(); }
  const std::vector<GridPoint>& row_labels() const noexcept { return row_labels_; }
  const std::vector<GridPoint>& col_labels() const noexcept { return col_labels_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }

  ExactMatrix transposed() const;
  ExactMatrix scaled(const Rational& factor) const;
  /// Row i of the result is row order[i] of this matrix. Throws BadPermutation.
  ExactMatrix permuted_rows(std::span<const std::size_t> order) const;
  ExactMatrix permuted_cols(std::span<const std::size_t> order) const;

  /// Plain text, one row per line, space-separated "p/q" entries.
  std::string dump() const;

  /// Labels of the result come from lhs rows and rhs columns. Throws
  /// DimensionMismatch.
  friend ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::vector<GridPoint> row_labels_;
  std::vector<GridPoint> col_labels_;
  std::vector<Rational> entries_;
};

struct RankResult {
  std::size_t rank = 0;
  /// Leftmost greedy independent columns, ascending.
  std::vector<std::size_t> pivot_cols;
};

/// Exact rank over Q. Rows are scaled to integers, then reduced with
/// fraction-free (Bareiss) elimination, pivoting on the first nonzero entry.
RankResult rank(const ExactMatrix& m);

/// Greedy maximal independent column set, scanning columns in `order`.
/// Returns the labels of the chosen columns in lex order. Throws
/// BadPermutation.
std::vector<GridPoint> pivot_columns_in_order(const ExactMatrix& m, std::span<const std::size_t> order);

/// Y^(alpha)(beta) = prod_i beta_i (beta_i - 1) ... (beta_i - alpha_i + 1).
/// Throws LengthMismatch.
BigInt falling_factorial_value(const GridPoint& alpha, const GridPoint& beta);

/// alpha! = prod alpha_i!.
BigInt point_factorial(const GridPoint& alpha);

/// Rows: falling-factorial functions indexed by `rows`; columns: points.
ExactMatrix eval_matrix(std::vector<GridPoint> rows, std::vector<GridPoint> cols);

/// Ev_{D,E}: rows and columns are the unfolded weight sets. Throws
/// WeightOutOfRange.
ExactMatrix eval_matrix(const UniformGrid& grid, const WeightSet& row_weights, const WeightSet& col_weights);

/// U_{d,d+1}(alpha, beta) = [alpha <= beta]. Throws WeightOutOfRange unless
/// 0 <= d <= N-1.
ExactMatrix up_matrix(const UniformGrid& grid, int d);

/// diag_w = diag(alpha! : alpha in layer w).
ExactMatrix diag_matrix(const UniformGrid& grid, int w);

/// Incrementally maintained echelon basis of integer vectors of a fixed
/// length. Used for rank-increase tests where one basis is probed many times.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t length) : length_(length) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  /// Adds v; returns true when the rank increased.
  bool insert(std::vector<BigInt> v);
  /// True when v already lies in the span.
  bool contains(std::vector<BigInt> v) const;

 private:
  /// Reduces v against the basis; returns the index of its first nonzero
  /// entry, or length_ if it reduced to zero.
  std::size_t reduce(std::vector<BigInt>& v) const;

  std::size_t length_;
  std::vector<std::vector<BigInt>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace gridhilbert
