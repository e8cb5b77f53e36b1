#pragma once

#include <gridhilbert/grid.hpp>
#include <gridhilbert/numeric.hpp>

#include <span>
#include <vector>

namespace gridhilbert {

/// One application of L_{N,d}: E itself when |E| <= d, otherwise
/// [0, t_{s-d}] u E u [t_{d+1}, N] for E = {t_1 < ... < t_s}.
WeightSet l_step(int max_weight, int degree, const WeightSet& set);

struct LBar {
  WeightSet closure;
  /// Number of l_step applications that changed the set.
  int iterations = 0;
};

/// Least fixpoint of l_step containing E.
LBar l_bar_iterate(int max_weight, int degree, const WeightSet& set);
WeightSet l_bar(int max_weight, int degree, const WeightSet& set);

/// Degree-d Zariski closure of an arbitrary point set inside the grid: every
/// x for which appending the evaluation column of x to the degree <= d
/// evaluation matrix of A leaves its rank unchanged. Returned in lex order.
/// Throws DegreeOutOfRange / PointNotInGrid.
std::vector<GridPoint> z_closure_points(const UniformGrid& grid, int degree, std::span<const GridPoint> points);

/// Precomputes the degree-d evaluation column of every grid point so that
/// many closures at the same degree share the work.
class ZClosureEngine {
 public:
  /// Throws DegreeOutOfRange.
  ZClosureEngine(const UniformGrid& grid, int degree);

  const UniformGrid& grid() const noexcept { return grid_; }
  int degree() const noexcept { return degree_; }

  /// Throws PointNotInGrid.
  std::vector<GridPoint> closure_points(std::span<const GridPoint> points) const;
  /// Throws WeightOutOfRange.
  WeightSet zstar(const WeightSet& set) const;

 private:
  std::size_t index_of(const GridPoint& point) const;

  UniformGrid grid_;
  int degree_;
  std::vector<GridPoint> points_;
  std::vector<std::vector<BigInt>> columns_;
};

/// Largest weight-determined subset of the Z-closure of the layers of E.
WeightSet zstar_closure(const UniformGrid& grid, int degree, const WeightSet& set);

/// T_{N,i} = [0, i-1] u [N-i+1, N]. Throws WeightOutOfRange.
WeightSet t_set(int max_weight, int i);

struct ClosureReport {
  WeightSet input;
  WeightSet lbar;
  WeightSet zstar;
  int iterations = 0;

  friend bool operator==(const ClosureReport&, const ClosureReport&) = default;
};

ClosureReport closure_report(const UniformGrid& grid, int degree, const WeightSet& set);

}  // namespace gridhilbert
