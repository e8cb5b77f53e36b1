#include <gridhilbert/errors.hpp>
#include <gridhilbert/hilbert.hpp>
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

void require_weight(int max_weight, int w) {
  if (w < 0 || w > max_weight) {
    throw Error(ErrorKind::WeightOutOfRange,
                "weight " + std::to_string(w) + " outside [0," + std::to_string(max_weight) + "]");
  }
}

}  // namespace

BEEnumeration be_enumeration(int max_weight, int degree, const WeightSet& set) {
  require_degree(max_weight, degree);
  set.require_within(max_weight);
  BEEnumeration out;
  for (int t = degree; t >= 0; --t) {
    if (!set.contains(t)) out.t_desc.push_back(t);
  }
  std::vector<int> kept;
  for (int w : set) {
    if (w <= degree) {
      kept.push_back(w);
    } else {
      out.w_asc.push_back(w);
    }
  }
  out.kept = WeightSet(std::move(kept));
  return out;
}

BigInt hilbert_layer(const UniformGrid& grid, int degree, int w) {
  require_weight(grid.max_weight(), degree);
  require_weight(grid.max_weight(), w);
  const auto sizes = layer_sizes(grid);
  if (w <= degree) return sizes[w];
  return std::min(sizes[degree], sizes[w]);
}

BigInt hilbert_closed(const LayerSizeTable& sizes, int degree, const WeightSet& set) {
  const auto be = be_enumeration(sizes.max_weight(), degree, set);
  BigInt total = sizes.count(be.kept);
  const std::size_t pairs = std::min(be.t_desc.size(), be.w_asc.size());
  for (std::size_t j = 0; j < pairs; ++j) total += std::min(sizes[be.t_desc[j]], sizes[be.w_asc[j]]);
  return total;
}

BigInt hilbert_closed(const UniformGrid& grid, int degree, const WeightSet& set) {
  return hilbert_closed(layer_sizes(grid), degree, set);
}

std::size_t hilbert_rank_oracle(const UniformGrid& grid, int degree, const WeightSet& set) {
  grid.require_degree(degree);
  set.require_within(grid.max_weight());
  return rank(eval_matrix(grid, WeightSet::interval(0, degree), set)).rank;
}

BigInt hilbert_cube_closed(int n, int degree, const WeightSet& set) {
  if (n < 1) throw Error(ErrorKind::EmptyArities, "cube dimension must be positive");
  require_degree(n, degree);
  set.require_within(n);
  auto binom = [n](int k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
  };
  const auto be = be_enumeration(n, degree, set);
  BigInt total = 0;
  for (int w : be.kept) total += binom(w);
  const std::size_t pairs = std::min(be.t_desc.size(), be.w_asc.size());
  for (std::size_t j = 0; j < pairs; ++j) total += std::min(binom(be.t_desc[j]), binom(be.w_asc[j]));
  return total;
}

HilbertProfile hilbert_profile(int degree, const WeightSet& set) {
  if (degree < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
  const auto need = static_cast<std::size_t>(degree) + 1;
  if (set.size() < need) {
    throw Error(ErrorKind::SetTooSmall,
                "profile needs |E| >= " + std::to_string(need) + ", got " + std::to_string(set.size()));
  }
  std::vector<int> free_values;
  for (int v = degree; v >= 0; --v) {
    if (!set.contains(v)) free_values.push_back(v);
  }
  HilbertProfile out;
  auto next_free = free_values.begin();
  for (std::size_t j = 0; j < need; ++j) {
    const int u = set.members()[j];
    out.pairs.emplace_back(u, u <= degree ? u : *next_free++);
  }
  return out;
}

BigInt profile_sum(const LayerSizeTable& sizes, const HilbertProfile& profile) {
  BigInt total = 0;
  for (const auto& [u, v] : profile.pairs) total += std::min(sizes[u], sizes[v]);
  return total;
}

bool is_interval_compatible(int first, int last, std::span<const int> values) {
  const long expected = std::max(0L, static_cast<long>(last) - first + 1);
  if (static_cast<long>(values.size()) != expected) {
    throw Error(ErrorKind::LengthMismatch, "interval [" + std::to_string(first) + "," + std::to_string(last) +
                                               "] needs " + std::to_string(expected) + " values");
  }
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::DuplicateEntries, "assigned values must be distinct");
  }
  auto outside = [&](int w) { return w < first || w > last; };
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int t = first + static_cast<int>(i);
    const int w = values[i];
    if (w < t) return false;
    if (w != t && w <= last) return false;
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (outside(w) && outside(values[j]) && !(values[j] < w)) return false;
    }
  }
  return true;
}

std::size_t rank_block(const UniformGrid& grid, const WeightSet& row_weights, const WeightSet& col_weights) {
  return rank(eval_matrix(grid, row_weights, col_weights)).rank;
}

}  // namespace gridhilbert
