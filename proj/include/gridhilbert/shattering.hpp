#pragma once

#include <gridhilbert/grid.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace gridhilbert {

/// A set of exponent vectors kept in lex order. Construction does not force
/// downward closure; is_downset() checks it.
class MonomialDownset {
 public:
  MonomialDownset() = default;
  explicit MonomialDownset(std::vector<GridPoint> members);

  const std::vector<GridPoint>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const GridPoint& exponent) const;
  bool is_downset() const;
  bool is_subset_of(const MonomialDownset& other) const;
  /// Members of weight at most max_weight.
  MonomialDownset truncated(int max_weight) const;

  friend bool operator==(const MonomialDownset&, const MonomialDownset&) = default;

 private:
  std::vector<GridPoint> members_;
};

/// Largest index i (1-based) with b(i) >= 1. Throws EmptyMultiset.
int tau(const GridPoint& b);

/// b*(i) = 0 for i <= tau(b), k_i - 1 after. Throws EmptyMultiset /
/// PointNotInGrid.
GridPoint b_star(const UniformGrid& grid, const GridPoint& b);

/// |Delta b| = prod (b_i + 1).
std::size_t down_set_size(const GridPoint& b);

/// Order shattering over multisets (lex order, coordinate 1 most
/// significant):
///   b = 0: A is nonempty;
///   b != 0: with tau = tau(b) and m = b(tau), A is split into classes that
///   agree on a n b*; some class must hold m+1 distinct tau-levels
///   {a : a(tau) = c} each shattering b with coordinate tau cleared, the
///   levels together holding at least |Delta b| points.
/// For Boolean cubes this is the classical set-system definition.
/// Throws PointNotInGrid.
bool order_shatters(const UniformGrid& grid, std::span<const GridPoint> points, const GridPoint& b);

/// {b in G : A order shatters b}.
MonomialDownset ord_str(const UniformGrid& grid, std::span<const GridPoint> points);

/// Standard monomials of the vanishing ideal of A under lex with
/// X_1 > ... > X_n: greedy pivot columns of the monomial evaluation matrix
/// with columns X^alpha, alpha in G, in ascending lex order.
MonomialDownset standard_monomials(const UniformGrid& grid, std::span<const GridPoint> points);

}  // namespace gridhilbert
