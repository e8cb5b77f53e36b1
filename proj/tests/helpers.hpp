#pragma once

#include <gridhilbert/errors.hpp>
#include <gridhilbert/grid.hpp>

#include <doctest.h>

#include <set>
#include <vector>

#include "oracle.hpp"

namespace test {

template <typename F>
gridhilbert::ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const gridhilbert::Error& e) {
    return e.kind();
  }
  FAIL("expected gridhilbert::Error");
  return gridhilbert::ErrorKind::ParseError;
}

inline std::set<int> as_set(const gridhilbert::WeightSet& e) { return {e.begin(), e.end()}; }

inline gridhilbert::WeightSet from_set(const std::set<int>& s) {
  return gridhilbert::WeightSet(std::vector<int>(s.begin(), s.end()));
}

inline std::vector<oracle::Point> raw(const std::vector<gridhilbert::GridPoint>& pts) {
  std::vector<oracle::Point> out;
  for (const auto& p : pts) out.push_back(p.coords());
  return out;
}

inline std::vector<gridhilbert::GridPoint> wrap(const std::vector<oracle::Point>& pts) {
  std::vector<gridhilbert::GridPoint> out;
  for (const auto& p : pts) out.emplace_back(p);
  return out;
}

/// Small grids used by the property tests (the suites cover the full family).
inline const std::vector<std::vector<int>>& small_grids() {
  static const std::vector<std::vector<int>> grids{{2},    {3},       {4},       {2, 2},    {2, 3},    {3, 2},
                                                   {3, 3}, {2, 4},    {3, 4},    {2, 2, 2}, {2, 2, 3}, {2, 3, 2},
                                                   {2, 2, 2, 2}};
  return grids;
}

}  // namespace test
