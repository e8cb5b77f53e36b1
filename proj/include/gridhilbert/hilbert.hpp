#pragma once

#include <gridhilbert/grid.hpp>
#include <gridhilbert/numeric.hpp>

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace gridhilbert {

/// The (N,d) pairing: t_desc lists [0,d] \ E from the largest down, w_asc
/// lists E \ [0,d] from the smallest up, kept is E n [0,d]. The closed form
/// pairs t_desc[j] with w_asc[j].
struct BEEnumeration {
  std::vector<int> t_desc;
  std::vector<int> w_asc;
  WeightSet kept;

  friend bool operator==(const BEEnumeration&, const BEEnumeration&) = default;
};

/// Throws DegreeOutOfRange / WeightOutOfRange.
BEEnumeration be_enumeration(int max_weight, int degree, const WeightSet& set);

/// Affine Hilbert function of the single layer w. For d < w this is
/// min([d],[w]); for w <= d every function on the layer is reachable and
/// the value is [w].
BigInt hilbert_layer(const UniformGrid& grid, int degree, int w);

/// Closed form: sum over E n [0,d] of [w] plus sum_j min([t_j],[w_j]).
BigInt hilbert_closed(const UniformGrid& grid, int degree, const WeightSet& set);
BigInt hilbert_closed(const LayerSizeTable& sizes, int degree, const WeightSet& set);

/// rank(Ev_{[0,d],E}); the brute-force reference for hilbert_closed.
std::size_t hilbert_rank_oracle(const UniformGrid& grid, int degree, const WeightSet& set);

/// Binomial form on the Boolean cube {0,1}^n.
BigInt hilbert_cube_closed(int n, int degree, const WeightSet& set);

struct HilbertProfile {
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const HilbertProfile&, const HilbertProfile&) = default;
};

/// ((u_1,v_1),...,(u_{d+1},v_{d+1})): u are the d+1 smallest members of E,
/// v_j = u_j whenever u_j <= d, and the remaining values of [0,d] are laid
/// out in decreasing order across the pairs with u_j > d.
/// Throws SetTooSmall when |E| < d+1.
HilbertProfile hilbert_profile(int degree, const WeightSet& set);

/// sum_j min([u_j],[v_j]).
BigInt profile_sum(const LayerSizeTable& sizes, const HilbertProfile& profile);

/// Checks the three I-compatibility conditions for the assignment
/// t -> values[t - first] over I = [first, last]. The off-interval bound uses
/// d = last. Throws LengthMismatch / DuplicateEntries.
bool is_interval_compatible(int first, int last, std::span<const int> values);

/// rank(Ev_{D,E}).
std::size_t rank_block(const UniformGrid& grid, const WeightSet& row_weights, const WeightSet& col_weights);

}  // namespace gridhilbert
