#include <gridhilbert/errors.hpp>
#include <gridhilbert/matrix.hpp>
#include <gridhilbert/shattering.hpp>

#include <algorithm>
#include <map>

namespace gridhilbert {

MonomialDownset::MonomialDownset(std::vector<GridPoint> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool MonomialDownset::contains(const GridPoint& exponent) const {
  return std::binary_search(members_.begin(), members_.end(), exponent);
}

bool MonomialDownset::is_downset() const {
  for (const auto& b : members_) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] == 0) continue;
      GridPoint below = b;
      --below[i];
      if (!contains(below)) return false;
    }
  }
  return true;
}

bool MonomialDownset::is_subset_of(const MonomialDownset& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

MonomialDownset MonomialDownset::truncated(int max_weight) const {
  std::vector<GridPoint> kept;
  for (const auto& b : members_) {
    if (weight(b) <= max_weight) kept.push_back(b);
  }
  return MonomialDownset(std::move(kept));
}

int tau(const GridPoint& b) {
  for (std::size_t i = b.size(); i > 0; --i) {
    if (b[i - 1] >= 1) return static_cast<int>(i);
  }
  throw Error(ErrorKind::EmptyMultiset, "tau is undefined for the zero multiset");
}

GridPoint b_star(const UniformGrid& grid, const GridPoint& b) {
  grid.require_contains(b);
  const auto t = static_cast<std::size_t>(tau(b));
  GridPoint out = b;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i < t ? 0 : grid.arity(i) - 1;
  return out;
}

std::size_t down_set_size(const GridPoint& b) {
  std::size_t out = 1;
  for (int c : b.coords()) out *= static_cast<std::size_t>(c) + 1;
  return out;
}

namespace {

using PointRefs = std::vector<const GridPoint*>;

// b is modified during the recursion and restored before returning.
bool shatters(const PointRefs& points, GridPoint& b) {
  if (b.is_zero()) return !points.empty();
  const std::size_t need = down_set_size(b);
  if (points.size() < need) return false;
  const auto t = static_cast<std::size_t>(tau(b)) - 1;
  const int m = b[t];

  // tail after t -> level a(t) -> members
  std::map<std::vector<int>, std::map<int, PointRefs>> classes;
  for (const GridPoint* a : points) {
    std::vector<int> tail(a->coords().begin() + static_cast<std::ptrdiff_t>(t) + 1, a->coords().end());
    classes[std::move(tail)][(*a)[t]].push_back(a);
  }

  b[t] = 0;
  bool found = false;
  for (const auto& [tail, levels] : classes) {
    if (levels.size() < static_cast<std::size_t>(m) + 1) continue;
    int good = 0;
    std::size_t held = 0;
    for (const auto& [level, members] : levels) {
      if (shatters(members, b)) {
        ++good;
        held += members.size();
      }
    }
    if (good >= m + 1 && held >= need) {
      found = true;
      break;
    }
  }
  b[t] = m;
  return found;
}

PointRefs checked_refs(const UniformGrid& grid, std::span<const GridPoint> points) {
  PointRefs refs;
  refs.reserve(points.size());
  for (const auto& a : points) {
    grid.require_contains(a);
    refs.push_back(&a);
  }
  return refs;
}

BigInt monomial_value(const GridPoint& alpha, const GridPoint& x) {
  BigInt out = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    BigInt factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(x[i]), static_cast<unsigned long>(alpha[i]));
    out *= factor;
  }
  return out;
}

}  // namespace

bool order_shatters(const UniformGrid& grid, std::span<const GridPoint> points, const GridPoint& b) {
  grid.require_contains(b);
  GridPoint probe = b;
  return shatters(checked_refs(grid, points), probe);
}

MonomialDownset ord_str(const UniformGrid& grid, std::span<const GridPoint> points) {
  const auto refs = checked_refs(grid, points);
  std::vector<GridPoint> out;
  for (auto b : enumerate_points(grid)) {
    if (shatters(refs, b)) out.push_back(b);
  }
  return MonomialDownset(std::move(out));
}

MonomialDownset standard_monomials(const UniformGrid& grid, std::span<const GridPoint> points) {
  for (const auto& a : points) grid.require_contains(a);
  std::vector<GridPoint> distinct(points.begin(), points.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  SpanBuilder span(distinct.size());
  std::vector<GridPoint> out;
  if (distinct.empty()) return {};
  for (const auto& alpha : enumerate_points(grid)) {
    std::vector<BigInt> column;
    column.reserve(distinct.size());
    for (const auto& x : distinct) column.push_back(monomial_value(alpha, x));
    if (span.insert(std::move(column))) out.push_back(alpha);
    if (span.rank() == distinct.size()) break;
  }
  return MonomialDownset(std::move(out));
}

}  // namespace gridhilbert
