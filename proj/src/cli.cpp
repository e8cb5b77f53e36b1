#include <gridhilbert/cli.hpp>
#include <gridhilbert/errors.hpp>
#include <gridhilbert/matrix.hpp>
#include <gridhilbert/report.hpp>
#include <gridhilbert/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace gridhilbert::cli {

using nlohmann::json;

namespace {

struct Args {
  std::string grid;
  std::string set;
  std::string points;
  int degree = 0;
  bool json = false;
  bool dump_matrix = false;
  std::string suite;
  std::size_t max_points = FamilyLimits{}.max_points;
  int max_cube_dimension = FamilyLimits{}.max_cube_dimension;
  std::uint64_t seed = SuiteOptions{}.seed;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string pairs_text(const HilbertProfile& profile) {
  std::vector<std::string> parts;
  for (const auto& [u, v] : profile.pairs) parts.push_back("(" + std::to_string(u) + "," + std::to_string(v) + ")");
  return join(parts, ",");
}

std::string list_text(const std::vector<int>& values) {
  std::vector<std::string> parts;
  for (int v : values) parts.push_back(std::to_string(v));
  return join(parts, ",");
}

/// "0,1;1,0" -> {(0,1),(1,0)}.
std::vector<GridPoint> parse_points(const std::string& text) {
  std::vector<GridPoint> out;
  if (text.empty()) return out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ';')) {
    std::vector<int> coords;
    std::stringstream coord_stream(item);
    std::string field;
    while (std::getline(coord_stream, field, ',')) {
      try {
        std::size_t used = 0;
        coords.push_back(std::stoi(field, &used));
        if (used != field.size()) throw std::invalid_argument(field);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::ParseError, "bad point coordinate '" + field + "' in '" + text + "'");
      }
    }
    out.emplace_back(std::move(coords));
  }
  return out;
}

std::vector<GridPoint> point_argument(const UniformGrid& grid, const Args& a) {
  if (!a.points.empty()) return parse_points(a.points);
  const auto set = parse_weight_set(a.set);
  set.require_within(grid.max_weight());
  return unfold_weight_set(grid, set);
}

json matrix_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_fraction_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

void hilbert_cmd(const Args& a, std::ostream& out) {
  const auto grid = parse_grid(a.grid);
  const auto set = parse_weight_set(a.set);
  const auto report = make_hilbert_report(grid, a.degree, set);
  const auto matrix = [&] { return eval_matrix(grid, WeightSet::interval(0, a.degree), set); };
  if (a.json) {
    auto j = to_json(report);
    if (a.dump_matrix) j["matrix"] = matrix_json(matrix());
    out << j.dump() << '\n';
    return;
  }
  out << "grid=" << report.grid << "\ndegree=" << report.degree << "\nset=" << to_string(report.set)
      << "\nclosed=" << report.closed << "\noracle=" << report.oracle
      << "\nprofile=" << (report.profile ? pairs_text(*report.profile) : "none") << '\n';
  if (a.dump_matrix) out << "matrix:\n" << matrix().dump();
}

void layer_sizes_cmd(const Args& a, std::ostream& out) {
  const auto grid = parse_grid(a.grid);
  const auto table = layer_sizes(grid);
  std::vector<std::string> sizes;
  for (const auto& s : table.sizes()) sizes.push_back(s.get_str());
  if (a.json) {
    out << json{{"grid", grid.spec()}, {"sizes", sizes}}.dump() << '\n';
  } else {
    out << join(sizes, ",") << '\n';
  }
}

void be_enum_cmd(const Args& a, std::ostream& out) {
  const auto grid = parse_grid(a.grid);
  const auto set = parse_weight_set(a.set);
  const auto be = be_enumeration(grid.max_weight(), a.degree, set);
  if (a.json) {
    out << json{{"grid", grid.spec()}, {"degree", a.degree},     {"set", set.members()},
                {"t", be.t_desc},      {"w", be.w_asc},          {"kept", be.kept.members()}}
               .dump()
        << '\n';
    return;
  }
  out << "t=" << list_text(be.t_desc) << "\nw=" << list_text(be.w_asc) << "\nkept=" << to_string(be.kept) << '\n';
}

void profile_cmd(const Args& a, std::ostream& out) {
  const auto set = parse_weight_set(a.set);
  const auto profile = hilbert_profile(a.degree, set);
  std::optional<BigInt> sum;
  if (!a.grid.empty()) {
    const auto grid = parse_grid(a.grid);
    set.require_within(grid.max_weight());
    sum = profile_sum(layer_sizes(grid), profile);
  }
  if (a.json) {
    json pairs = json::array();
    for (const auto& [u, v] : profile.pairs) pairs.push_back({u, v});
    json j{{"degree", a.degree}, {"set", set.members()}, {"profile", pairs}};
    if (sum) j["sum"] = sum->get_str();
    out << j.dump() << '\n';
    return;
  }
  out << "profile=" << pairs_text(profile) << '\n';
  if (sum) out << "sum=" << *sum << '\n';
}

void closure_cmd(const Args& a, std::ostream& out) {
  const auto grid = parse_grid(a.grid);
  const auto set = parse_weight_set(a.set);
  const auto report = closure_report(grid, a.degree, set);
  const bool su2 = is_su2(grid);
  if (a.json) {
    out << to_json(report, su2).dump() << '\n';
    return;
  }
  out << "input=" << to_string(report.input) << "\nlbar=" << to_string(report.lbar)
      << "\nzstar=" << to_string(report.zstar) << "\niterations=" << report.iterations
      << "\nsu2=" << (su2 ? "true" : "false") << '\n';
}

void downset_cmd(const Args& a, std::ostream& out, bool shattered) {
  const auto grid = parse_grid(a.grid);
  const auto points = point_argument(grid, a);
  const auto downset = shattered ? ord_str(grid, points) : standard_monomials(grid, points);
  if (a.json) {
    out << to_json(downset).dump() << '\n';
    return;
  }
  std::vector<std::string> parts;
  for (const auto& b : downset.members()) parts.push_back(to_string(b));
  out << join(parts, " ") << '\n';
}

int verify_cmd(const Args& a, std::ostream& out) {
  SuiteOptions options;
  options.limits.max_points = a.max_points;
  options.limits.max_cube_dimension = a.max_cube_dimension;
  options.seed = a.seed;
  const auto result = run_suite(a.suite, options);
  if (a.json) {
    out << to_json(result).dump() << '\n';
  } else {
    out << "suite=" << result.name << "\npassed=" << (result.passed ? "true" : "false")
        << "\ngrids=" << result.grids << "\ninstances=" << result.instances << "\nfailures=" << result.failures
        << '\n';
    if (!result.passed) out << "counterexamples=" << result.counterexamples.dump() << '\n';
  }
  return result.passed ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine Hilbert functions, closures and shattering on uniform grids", "gridhilbert"};
  app.require_subcommand(1);
  Args a;

  auto add_grid = [&a](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--grid", a.grid, "arities, e.g. 3,3");
    if (required) opt->required();
  };
  auto add_set = [&a](CLI::App* sub) { sub->add_option("--set", a.set, "weight set, e.g. 0,2-4"); };
  auto add_degree = [&a](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--degree", a.degree, "polynomial degree d");
    if (required) opt->required();
  };
  auto add_json = [&a](CLI::App* sub) { sub->add_flag("--json", a.json, "emit JSON"); };

  auto* hilbert = app.add_subcommand("hilbert", "closed form and rank oracle for H_d(E)");
  add_grid(hilbert, true);
  add_set(hilbert);
  add_degree(hilbert, true);
  add_json(hilbert);
  hilbert->add_flag("--dump-matrix", a.dump_matrix, "also print the evaluation matrix");

  auto* sizes = app.add_subcommand("layer-sizes", "number of points in each weight layer");
  add_grid(sizes, true);
  add_json(sizes);

  auto* be = app.add_subcommand("be-enum", "missing and excess weights paired by the closed form");
  add_grid(be, true);
  add_set(be);
  add_degree(be, true);
  add_json(be);

  auto* profile = app.add_subcommand("profile", "Hilbert profile of E (needs |E| >= d+1)");
  add_grid(profile, false);
  add_set(profile);
  add_degree(profile, true);
  add_json(profile);

  auto* closure = app.add_subcommand("closure", "L-bar fixpoint and Z*-closure of E");
  add_grid(closure, true);
  add_set(closure);
  add_degree(closure, true);
  add_json(closure);

  auto* sm = app.add_subcommand("sm", "standard monomials of a point set under lex");
  auto* ordstr = app.add_subcommand("ordstr", "multisets order shattered by a point set");
  for (auto* sub : {sm, ordstr}) {
    add_grid(sub, true);
    add_set(sub);
    sub->add_option("--points", a.points, "explicit points, e.g. 0,1;1,0 (overrides --set)");
    add_json(sub);
  }

  auto* verify = app.add_subcommand("verify", "run a verification suite over the grid family");
  verify->add_option("suite", a.suite, join(suite_names(), ", "))->required();
  verify->add_option("--max-points", a.max_points, "largest grid in the family");
  verify->add_option("--max-cube-dim", a.max_cube_dimension, "largest Boolean cube in the family");
  verify->add_option("--seed", a.seed, "seed for sampled suites");
  add_json(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << error_name(ErrorKind::ParseError) << ": " << e.what() << '\n';
    return 1;
  }

  try {
    if (*hilbert) hilbert_cmd(a, out);
    if (*sizes) layer_sizes_cmd(a, out);
    if (*be) be_enum_cmd(a, out);
    if (*profile) profile_cmd(a, out);
    if (*closure) closure_cmd(a, out);
    if (*sm) downset_cmd(a, out, false);
    if (*ordstr) downset_cmd(a, out, true);
    if (*verify) return verify_cmd(a, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace gridhilbert::cli
