#include <gridhilbert/errors.hpp>
#include <gridhilbert/report.hpp>

namespace gridhilbert {

using nlohmann::json;

namespace {

BigInt big_from_json(const json& j) {
  BigInt out;
  if (!j.is_string() || out.set_str(j.get<std::string>(), 10) != 0) {
    throw Error(ErrorKind::ParseError, "expected a decimal string, got " + j.dump());
  }
  return out;
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace

HilbertReport make_hilbert_report(const UniformGrid& grid, int degree, const WeightSet& set) {
  HilbertReport out{grid.spec(), degree, set, hilbert_closed(grid, degree, set),
                    BigInt(static_cast<unsigned long>(hilbert_rank_oracle(grid, degree, set))), std::nullopt};
  if (set.size() >= static_cast<std::size_t>(degree) + 1) out.profile = hilbert_profile(degree, set);
  return out;
}

json to_json(const HilbertReport& report) {
  json profile = nullptr;
  if (report.profile) {
    profile = json::array();
    for (const auto& [u, v] : report.profile->pairs) profile.push_back({u, v});
  }
  return json{{"grid", report.grid},          {"degree", report.degree},
              {"set", report.set.members()},  {"closed", report.closed.get_str()},
              {"oracle", report.oracle.get_str()}, {"profile", profile}};
}

HilbertReport hilbert_report_from_json(const json& j) {
  return guarded([&] {
    HilbertReport out{j.at("grid").get<std::string>(), j.at("degree").get<int>(),
                      WeightSet(j.at("set").get<std::vector<int>>()), big_from_json(j.at("closed")),
                      big_from_json(j.at("oracle")), std::nullopt};
    if (!j.at("profile").is_null()) {
      HilbertProfile profile;
      for (const auto& pair : j.at("profile")) profile.pairs.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
      out.profile = profile;
    }
    return out;
  });
}

json to_json(const ClosureReport& report, bool su2) {
  return json{{"input", report.input.members()}, {"lbar", report.lbar.members()},
              {"zstar", report.zstar.members()}, {"iterations", report.iterations},
              {"su2", su2}};
}

ClosureReport closure_report_from_json(const json& j) {
  return guarded([&] {
    return ClosureReport{WeightSet(j.at("input").get<std::vector<int>>()),
                         WeightSet(j.at("lbar").get<std::vector<int>>()),
                         WeightSet(j.at("zstar").get<std::vector<int>>()), j.at("iterations").get<int>()};
  });
}

json to_json(const MonomialDownset& downset) {
  // Lex order of the members is lex_weight order for every grid.
  json out = json::array();
  for (const auto& b : downset.members()) out.push_back(b.coords());
  return out;
}

MonomialDownset downset_from_json(const json& j) {
  return guarded([&] {
    std::vector<GridPoint> members;
    for (const auto& b : j) members.emplace_back(b.get<std::vector<int>>());
    return MonomialDownset(std::move(members));
  });
}

}  // namespace gridhilbert
