#include <gridhilbert/closure.hpp>
#include <gridhilbert/errors.hpp>
#include <gridhilbert/hilbert.hpp>
#include <gridhilbert/matrix.hpp>
#include <gridhilbert/shattering.hpp>
#include <gridhilbert/verify.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace gridhilbert {

using nlohmann::json;

namespace {

class Recorder {
 public:
  Recorder(SuiteResult& result, std::size_t cap) : result_(result), cap_(cap) {}

  void grid() { ++result_.grids; }
  void check(bool ok, const std::function<json()>& describe) {
    ++result_.instances;
    if (ok) return;
    result_.passed = false;
    ++result_.failures;
    if (result_.counterexamples.size() < cap_) result_.counterexamples.push_back(describe());
  }

 private:
  SuiteResult& result_;
  std::size_t cap_;
};

json set_json(const WeightSet& set) { return json(set.members()); }

json points_json(const std::vector<GridPoint>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back(p.coords());
  return out;
}

std::uint64_t all_masks(int max_weight) { return std::uint64_t{1} << (max_weight + 1); }

std::vector<GridPoint> pick(const std::vector<GridPoint>& points, std::uint64_t mask) {
  std::vector<GridPoint> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (mask >> i & 1U) out.push_back(points[i]);
  }
  return out;
}

void grid_hilbert(const SuiteOptions& opt, Recorder& rec) {
  for (const auto& grid : grid_family(opt.limits)) {
    rec.grid();
    const auto sizes = layer_sizes(grid);
    const int n = grid.max_weight();
    for (int d = 0; d <= n; ++d) {
      for (std::uint64_t mask = 0; mask < all_masks(n); ++mask) {
        const auto set = WeightSet::from_mask(mask);
        const auto closed = hilbert_closed(sizes, d, set);
        const auto oracle = hilbert_rank_oracle(grid, d, set);
        rec.check(closed == oracle, [&] {
          return json{{"grid", grid.spec()}, {"degree", d}, {"set", set_json(set)},
                      {"closed", closed.get_str()}, {"oracle", oracle}};
        });
      }
    }
  }
}

void be_hilbert(const SuiteOptions& opt, Recorder& rec) {
  for (int n = 1; n <= opt.limits.max_cube_dimension; ++n) {
    const UniformGrid grid(std::vector<int>(static_cast<std::size_t>(n), 2));
    rec.grid();
    const auto sizes = layer_sizes(grid);
    for (int d = 0; d <= n; ++d) {
      for (std::uint64_t mask = 0; mask < all_masks(n); ++mask) {
        const auto set = WeightSet::from_mask(mask);
        const auto cube = hilbert_cube_closed(n, d, set);
        const auto closed = hilbert_closed(sizes, d, set);
        rec.check(cube == closed, [&] {
          return json{{"grid", grid.spec()}, {"degree", d}, {"set", set_json(set)},
                      {"cube", cube.get_str()}, {"closed", closed.get_str()}};
        });
      }
    }
  }
}

void wilson(const SuiteOptions& opt, Recorder& rec) {
  for (const auto& grid : grid_family(opt.limits)) {
    rec.grid();
    const auto sizes = layer_sizes(grid);
    const int n = grid.max_weight();
    for (int d = 0; d <= n; ++d) {
      std::vector<std::size_t> ranks;
      for (int w = 0; w <= n; ++w) ranks.push_back(hilbert_rank_oracle(grid, d, WeightSet{w}));
      for (int w = 0; w <= n; ++w) {
        const auto value = ranks[static_cast<std::size_t>(w)];
        const BigInt expected = std::min(sizes[d], sizes[w]);
        rec.check(expected == value, [&] {
          return json{{"grid", grid.spec()}, {"degree", d}, {"weight", w}, {"law", "single-layer"},
                      {"expected", expected.get_str()}, {"oracle", value}};
        });
        const auto dual = ranks[static_cast<std::size_t>(n - w)];
        rec.check(value == dual, [&] {
          return json{{"grid", grid.spec()}, {"degree", d}, {"weight", w}, {"law", "duality"},
                      {"oracle", value}, {"dual", dual}};
        });
      }
    }
  }
}

void up_rank(const SuiteOptions& opt, Recorder& rec) {
  for (const auto& grid : grid_family(opt.limits)) {
    rec.grid();
    const auto sizes = layer_sizes(grid);
    for (int d = 0; d < grid.max_weight(); ++d) {
      const auto r = rank(up_matrix(grid, d)).rank;
      const BigInt expected = std::min(sizes[d], sizes[d + 1]);
      rec.check(expected == r, [&] {
        return json{{"grid", grid.spec()}, {"degree", d}, {"rank", r}, {"expected", expected.get_str()}};
      });
    }
  }
}

void consec_span(const SuiteOptions& opt, Recorder& rec) {
  for (const auto& grid : grid_family(opt.limits)) {
    rec.grid();
    const int n = grid.max_weight();
    std::vector<std::vector<GridPoint>> layers;
    for (int j = 0; j <= n; ++j) layers.push_back(enumerate_layer(grid, j));

    for (int d = 0; d < n; ++d) {
      ExactMatrix chain = up_matrix(grid, d);
      BigInt factorial = 1;
      for (int w = d + 1; w <= n; ++w) {
        if (w > d + 1) chain = chain * up_matrix(grid, w - 1);
        factorial *= w - d;
        const auto lhs = eval_matrix(grid, WeightSet{d}, WeightSet{w});
        const auto rhs = (chain * diag_matrix(grid, w)).scaled(Rational(1, factorial));
        rec.check(lhs == rhs, [&] {
          return json{{"grid", grid.spec()}, {"degree", d}, {"weight", w}, {"law", "factorization"}};
        });

        // Ev_{d,w} (d'-d)! binom(w-d, w-d') = U_{d,d+1}...U_{d'-1,d'} Ev_{d',w} for d < d' < w.
        ExactMatrix partial = up_matrix(grid, d);
        for (int mid = d + 1; mid < w; ++mid) {
          if (mid > d + 1) partial = partial * up_matrix(grid, mid - 1);
          BigInt factor;
          mpz_fac_ui(factor.get_mpz_t(), static_cast<unsigned long>(mid - d));
          BigInt binom;
          mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(w - d), static_cast<unsigned long>(w - mid));
          const auto shifted = partial * eval_matrix(grid, WeightSet{mid}, WeightSet{w});
          rec.check(lhs.scaled(Rational(factor * binom)) == shifted, [&] {
            return json{{"grid", grid.spec()}, {"degree", d}, {"middle", mid}, {"weight", w}, {"law", "scaled-shift"}};
          });
        }

        // Pointwise on layer w: (w-d) Y^alpha = sum of Y^beta over beta >= alpha of weight d+1.
        for (const auto& alpha : layers[static_cast<std::size_t>(d)]) {
          for (const auto& x : layers[static_cast<std::size_t>(w)]) {
            BigInt sum = 0;
            for (const auto& beta : layers[static_cast<std::size_t>(d) + 1]) {
              if (dominated_by(alpha, beta)) sum += falling_factorial_value(beta, x);
            }
            const BigInt scaled = falling_factorial_value(alpha, x) * (w - d);
            rec.check(scaled == sum, [&] {
              return json{{"grid", grid.spec()}, {"degree", d}, {"weight", w}, {"law", "pointwise"},
                          {"alpha", alpha.coords()}, {"point", x.coords()}};
            });
          }
        }
      }
    }
  }
}

void tail_collapse(const SuiteOptions& opt, Recorder& rec) {
  for (const auto& grid : grid_family(opt.limits)) {
    rec.grid();
    const int n = grid.max_weight();
    for (int d = 0; d <= n / 2; ++d) {
      const int lo = n - d + 1;
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << d); ++bits) {
        const auto set = WeightSet::from_mask(bits << lo);
        const auto full = rank_block(grid, WeightSet{d}, set);
        const auto least = rank_block(grid, WeightSet{d}, WeightSet{set.min()});
        rec.check(full == least, [&] {
          return json{{"grid", grid.spec()}, {"degree", d}, {"set", set_json(set)}, {"rank", full},
                      {"rank_min", least}};
        });
      }
    }
  }
}

void spanning_collapse(const SuiteOptions& opt, Recorder& rec) {
  for (const auto& grid : grid_family(opt.limits)) {
    rec.grid();
    const int n = grid.max_weight();
    for (int d = 0; d < n; ++d) {
      const int lo = d + 1;
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << (n - d)); ++bits) {
        const auto set = WeightSet::from_mask(bits << lo);
        const int hi = std::min(n, d + static_cast<int>(set.size()));
        const auto all = rank_block(grid, WeightSet::interval(0, hi), set);
        const auto upper = rank_block(grid, WeightSet::interval(d + 1, hi), set);
        rec.check(all == upper, [&] {
          return json{{"grid", grid.spec()}, {"degree", d}, {"set", set_json(set)}, {"rank", all},
                      {"rank_upper", upper}};
        });
      }
    }
  }
}

void interval_compatible(const SuiteOptions& opt, Recorder& rec) {
  std::mt19937_64 rng(opt.seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (const auto& grid : grid_family(opt.limits)) {
    rec.grid();
    const auto sizes = layer_sizes(grid);
    const int n = grid.max_weight();
    for (std::size_t sample = 0; sample < opt.compatible_samples; ++sample) {
      const int c = uniform(0, n);
      const int d = uniform(c, n);
      const int moved = uniform(0, std::min(d - c + 1, n - d));

      std::vector<int> interval(static_cast<std::size_t>(d - c + 1));
      std::iota(interval.begin(), interval.end(), c);
      std::vector<int> movers;
      std::sample(interval.begin(), interval.end(), std::back_inserter(movers), moved, rng);
      std::vector<int> above(static_cast<std::size_t>(n - d));
      std::iota(above.begin(), above.end(), d + 1);
      std::vector<int> targets;
      std::sample(above.begin(), above.end(), std::back_inserter(targets), moved, rng);
      std::sort(targets.rbegin(), targets.rend());

      std::vector<int> values = interval;
      for (std::size_t i = 0; i < movers.size(); ++i) values[static_cast<std::size_t>(movers[i] - c)] = targets[i];

      BigInt expected = 0;
      for (int t = c; t <= d; ++t) expected += std::min(sizes[t], sizes[values[static_cast<std::size_t>(t - c)]]);
      const WeightSet set(values);
      const bool compatible = is_interval_compatible(c, d, values);
      const auto r = rank_block(grid, WeightSet::interval(c, d), set);
      rec.check(compatible && expected == r, [&] {
        return json{{"grid", grid.spec()}, {"interval", {c, d}}, {"values", values},
                    {"compatible", compatible}, {"rank", r}, {"expected", expected.get_str()}};
      });
    }
  }
}

// zstar tables indexed [degree][mask].
std::vector<std::vector<WeightSet>> zstar_tables(const UniformGrid& grid) {
  const int n = grid.max_weight();
  std::vector<std::vector<WeightSet>> out;
  for (int d = 0; d <= n; ++d) {
    const ZClosureEngine engine(grid, d);
    auto& row = out.emplace_back();
    row.reserve(all_masks(n));
    for (std::uint64_t mask = 0; mask < all_masks(n); ++mask) row.push_back(engine.zstar(WeightSet::from_mask(mask)));
  }
  return out;
}

void zstar_lbar(const SuiteOptions& opt, Recorder& rec) {
  for (const auto& grid : grid_family(opt.limits)) {
    if (!is_su2(grid)) continue;
    rec.grid();
    const int n = grid.max_weight();
    for (int d = 0; d <= n; ++d) {
      const ZClosureEngine engine(grid, d);
      for (std::uint64_t mask = 0; mask < all_masks(n); ++mask) {
        const auto set = WeightSet::from_mask(mask);
        const auto zstar = engine.zstar(set);
        const auto lbar = l_bar(n, d, set);
        rec.check(zstar == lbar, [&] {
          return json{{"grid", grid.spec()}, {"degree", d}, {"set", set_json(set)}, {"zstar", set_json(zstar)},
                      {"lbar", set_json(lbar)}};
        });
      }
    }
  }
}

void closure_laws(const SuiteOptions& opt, Recorder& rec) {
  for (const auto& grid : grid_family(opt.limits)) {
    rec.grid();
    const auto sizes = layer_sizes(grid);
    const int n = grid.max_weight();
    const bool su2 = is_su2(grid);
    const auto table = zstar_tables(grid);
    for (int d = 0; d <= n; ++d) {
      const auto& cl = table[static_cast<std::size_t>(d)];
      for (std::uint64_t mask = 0; mask < all_masks(n); ++mask) {
        const auto set = WeightSet::from_mask(mask);
        const auto& closed = cl[mask];
        auto fail = [&](const char* law) {
          return [&, law] {
            return json{{"grid", grid.spec()}, {"degree", d}, {"set", set_json(set)}, {"law", law},
                        {"zstar", set_json(closed)}};
          };
        };
        rec.check(hilbert_closed(sizes, d, set) == hilbert_closed(sizes, d, closed), fail("hilbert-invariance"));
        rec.check(set.is_subset_of(closed), fail("extensive"));
        rec.check(cl[closed.mask()] == closed, fail("idempotent"));
        if (d < n) rec.check(table[static_cast<std::size_t>(d) + 1][mask].is_subset_of(closed), fail("antitone"));
        bool monotone = true;
        for (int x = 0; x <= n; ++x) monotone = monotone && closed.is_subset_of(cl[mask | std::uint64_t{1} << x]);
        rec.check(monotone, fail("monotone"));
        if (set.size() >= static_cast<std::size_t>(d) + 1) {
          const auto ends = WeightSet::interval(0, set.min()).united(WeightSet::interval(set.max(), n));
          rec.check(ends.is_subset_of(closed), fail("closure-builder"));
        }

        const auto lbar = l_bar(n, d, set);
        bool lbar_ok = l_step(n, d, lbar) == lbar && set.is_subset_of(lbar);
        for (int x = 0; x <= n; ++x) lbar_ok = lbar_ok && lbar.is_subset_of(l_bar(n, d, set.united(WeightSet{x})));
        rec.check(lbar_ok, fail("lbar-laws"));
      }
      if (!su2) continue;
      for (int i = 0; i <= n; ++i) {
        const auto t = t_set(n, i);
        const auto expected = i <= d ? t : WeightSet::interval(0, n);
        const auto& closed = cl[t.mask()];
        rec.check(closed == expected, [&] {
          return json{{"grid", grid.spec()}, {"degree", d}, {"i", i}, {"law", "t-set"}, {"zstar", set_json(closed)},
                      {"expected", set_json(expected)}};
        });
      }
    }
  }
}

void check_shattering(const UniformGrid& grid, const std::vector<GridPoint>& points, Recorder& rec) {
  const auto ord = ord_str(grid, points);
  const auto sm = standard_monomials(grid, points);
  rec.check(ord == sm && ord.size() == points.size() && ord.is_downset(), [&] {
    return json{{"grid", grid.spec()}, {"points", points_json(points)}, {"ord_str", points_json(ord.members())},
                {"standard_monomials", points_json(sm.members())}};
  });
}

void shattering(const SuiteOptions& opt, Recorder& rec) {
  std::mt19937_64 rng(opt.seed);
  for (const auto& grid : grid_family(opt.limits)) {
    const auto count = grid.point_count();
    if (count > opt.sampled_points) continue;
    rec.grid();
    const auto points = enumerate_points(grid);
    if (count <= opt.exhaustive_points) {
      for (std::uint64_t mask = 0; mask < std::uint64_t{1} << count; ++mask) check_shattering(grid, pick(points, mask), rec);
      continue;
    }
    for (std::size_t sample = 0; sample < opt.shattering_samples; ++sample) {
      const auto size = std::uniform_int_distribution<std::size_t>(0, count)(rng);
      std::vector<GridPoint> chosen;
      std::sample(points.begin(), points.end(), std::back_inserter(chosen), size, rng);
      check_shattering(grid, chosen, rec);
    }
  }
}

void layers(const SuiteOptions& opt, Recorder& rec) {
  for (const auto& grid : grid_family(opt.limits)) {
    if (grid.point_count() > opt.limits.max_points) continue;
    rec.grid();
    const int n = grid.max_weight();
    std::vector<MonomialDownset> ord;
    std::vector<MonomialDownset> sm;
    for (int j = 0; j <= n; ++j) {
      const auto layer = enumerate_layer(grid, j);
      ord.push_back(ord_str(grid, layer));
      sm.push_back(standard_monomials(grid, layer));
    }
    for (int i = 0; i <= n; ++i) {
      const auto& si = sm[static_cast<std::size_t>(i)];
      rec.check(ord[static_cast<std::size_t>(i)] == si, [&] {
        return json{{"grid", grid.spec()}, {"layer", i}, {"law", "ord-str-equals-sm"}};
      });
      rec.check(si == sm[static_cast<std::size_t>(n - i)], [&] {
        return json{{"grid", grid.spec()}, {"layer", i}, {"law", "complement"}};
      });
      for (int j = i; j <= n / 2; ++j) {
        const auto& oj = ord[static_cast<std::size_t>(j)];
        rec.check(ord[static_cast<std::size_t>(i)] == oj.truncated(i), [&] {
          return json{{"grid", grid.spec()}, {"i", i}, {"j", j}, {"law", "ord-str-restriction"}};
        });
        rec.check(si.is_subset_of(sm[static_cast<std::size_t>(j)]), [&] {
          return json{{"grid", grid.spec()}, {"i", i}, {"j", j}, {"law", "sm-nesting"}};
        });
      }
    }
  }
}

void digression(const SuiteOptions&, Recorder& rec) {
  const UniformGrid grid({3, 3});
  rec.grid();
  const int d = 1;
  const auto base = hilbert_closed(grid, d, WeightSet{2});
  const auto base_oracle = hilbert_rank_oracle(grid, d, WeightSet{2});
  for (int a = 0; a <= grid.max_weight(); ++a) {
    if (a == 2) continue;
    const WeightSet set{a, 2};
    const auto value = hilbert_closed(grid, d, set);
    const auto oracle = hilbert_rank_oracle(grid, d, set);
    rec.check(value > base && oracle > base_oracle, [&] {
      return json{{"grid", grid.spec()}, {"degree", d}, {"set", set_json(set)}, {"closed", value.get_str()},
                  {"base", base.get_str()}};
    });
  }
}

using SuiteFn = void (*)(const SuiteOptions&, Recorder&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"grid-hilbert", grid_hilbert},
      {"be-hilbert", be_hilbert},
      {"wilson", wilson},
      {"up-rank", up_rank},
      {"consec-span", consec_span},
      {"tail-collapse", tail_collapse},
      {"spanning-collapse", spanning_collapse},
      {"interval-compatible", interval_compatible},
      {"zstar-lbar", zstar_lbar},
      {"closure-laws", closure_laws},
      {"shattering", shattering},
      {"layers", layers},
      {"digression", digression},
  };
  return suites;
}

}  // namespace

std::vector<UniformGrid> grid_family(const FamilyLimits& limits) {
  std::vector<UniformGrid> out;
  for (int dim = 1; dim <= limits.max_dimension; ++dim) {
    std::vector<int> arities(static_cast<std::size_t>(dim), limits.min_arity);
    while (true) {
      std::size_t points = 1;
      for (int k : arities) points *= static_cast<std::size_t>(k);
      if (points <= limits.max_points) out.emplace_back(arities);
      std::size_t i = arities.size();
      while (i > 0 && arities[i - 1] == limits.max_arity) arities[--i] = limits.min_arity;
      if (i == 0) break;
      ++arities[i - 1];
    }
  }
  for (int n = limits.max_dimension + 1; n <= limits.max_cube_dimension; ++n) {
    out.emplace_back(std::vector<int>(static_cast<std::size_t>(n), 2));
  }
  return out;
}

json to_json(const SuiteResult& result) {
  return json{{"suite", result.name},          {"passed", result.passed},
              {"grids", result.grids},         {"instances", result.instances},
              {"failures", result.failures},   {"counterexamples", result.counterexamples}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorKind::UnknownSuite, "no suite named '" + name + "'");
  SuiteResult result;
  result.name = name;
  Recorder rec(result, options.max_counterexamples);
  it->second(options, rec);
  return result;
}

}  // namespace gridhilbert
