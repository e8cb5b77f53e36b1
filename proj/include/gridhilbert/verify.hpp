#pragma once

#include <gridhilbert/grid.hpp>

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gridhilbert {

/// Size caps for the sweep family: every ordered arity tuple of dimension
/// <= max_dimension with arities in [min_arity, max_arity] and at most
/// max_points points, followed by the Boolean cubes of dimension
/// max_dimension+1 .. max_cube_dimension.
struct FamilyLimits {
  int max_dimension = 3;
  int min_arity = 2;
  int max_arity = 4;
  std::size_t max_points = 36;
  int max_cube_dimension = 6;
};

std::vector<UniformGrid> grid_family(const FamilyLimits& limits);

struct SuiteOptions {
  FamilyLimits limits;
  std::uint64_t seed = 20240601;
  /// Shattering: every subset on grids up to this many points ...
  std::size_t exhaustive_points = 16;
  /// ... and random subsets on larger grids up to this many points.
  std::size_t sampled_points = 27;
  std::size_t shattering_samples = 500;
  std::size_t compatible_samples = 200;
  std::size_t max_counterexamples = 5;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t grids = 0;
  std::size_t instances = 0;
  std::size_t failures = 0;
  /// The first failing instances in sweep order.
  nlohmann::json counterexamples = nlohmann::json::array();
};

nlohmann::json to_json(const SuiteResult& result);

const std::vector<std::string>& suite_names();

/// Throws UnknownSuite.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace gridhilbert
