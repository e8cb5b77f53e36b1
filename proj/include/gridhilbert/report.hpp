#pragma once

#include <gridhilbert/closure.hpp>
#include <gridhilbert/hilbert.hpp>
#include <gridhilbert/shattering.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace gridhilbert {

/// What the hilbert subcommand prints. Big integers travel as decimal
/// strings.
struct HilbertReport {
  std::string grid;
  int degree = 0;
  WeightSet set;
  BigInt closed;
  BigInt oracle;
  /// Absent when |E| < d+1.
  std::optional<HilbertProfile> profile;

  friend bool operator==(const HilbertReport&, const HilbertReport&) = default;
};

HilbertReport make_hilbert_report(const UniformGrid& grid, int degree, const WeightSet& set);

nlohmann::json to_json(const HilbertReport& report);
/// Throws ParseError on malformed input.
HilbertReport hilbert_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClosureReport& report, bool su2);
ClosureReport closure_report_from_json(const nlohmann::json& j);

/// Array of exponent vectors in lex_weight order.
nlohmann::json to_json(const MonomialDownset& downset);
MonomialDownset downset_from_json(const nlohmann::json& j);

}  // namespace gridhilbert
