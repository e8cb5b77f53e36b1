#include <gridhilbert/errors.hpp>
#include <gridhilbert/grid.hpp>

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gridhilbert;

namespace {

std::vector<long> as_longs(const LayerSizeTable& t) {
  std::vector<long> out;
  for (const auto& s : t.sizes()) out.push_back(s.get_si());
  return out;
}

}  // namespace

TEST_CASE("grid construction") {
  const auto g = make_grid({3, 3});
  CHECK(g.dimension() == 2);
  CHECK(g.max_weight() == 4);
  CHECK(g.point_count() == 9);
  CHECK(make_grid({2, 2, 2}).max_weight() == 3);
  CHECK(g.spec() == "3,3");

  CHECK(test::kind_of([] { make_grid({3, 1}); }) == ErrorKind::AritySmallerThanTwo);
  CHECK(test::kind_of([] { make_grid({}); }) == ErrorKind::EmptyArities);
}

TEST_CASE("layer sizes") {
  CHECK(as_longs(layer_sizes(make_grid({3, 3}))) == std::vector<long>{1, 2, 3, 2, 1});
  CHECK(as_longs(layer_sizes(make_grid({2, 2, 2}))) == std::vector<long>{1, 3, 3, 1});
  CHECK(as_longs(layer_sizes(make_grid({2}))) == std::vector<long>{1, 1});

  // Big grids need more than 64 bits.
  const auto big = layer_sizes(make_grid(std::vector<int>(40, 10)));
  CHECK(big.total() == BigInt("10000000000000000000000000000000000000000"));
}

TEST_CASE("layer sizes agree with enumeration and satisfy the table invariants") {
  for (const auto& arities : test::small_grids()) {
    CAPTURE(arities);
    const auto grid = make_grid(arities);
    const auto sizes = layer_sizes(grid);
    CHECK(as_longs(sizes) == oracle::layer_sizes(arities));
    const int n = grid.max_weight();
    for (int j = 0; j <= n; ++j) CHECK(sizes[j] == sizes[n - j]);
    CHECK(is_unimodal(sizes));
    CHECK(sizes.total() == BigInt(static_cast<unsigned long>(grid.point_count())));
  }
}

TEST_CASE("enumerate_layer") {
  const auto g = make_grid({3, 3});
  CHECK(enumerate_layer(g, 0) == std::vector<GridPoint>{{0, 0}});
  CHECK(enumerate_layer(g, 2) == std::vector<GridPoint>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(test::kind_of([] { enumerate_layer(make_grid({2, 2}), 3); }) == ErrorKind::WeightOutOfRange);
  CHECK(test::kind_of([&] { enumerate_layer(g, -1); }) == ErrorKind::WeightOutOfRange);

  for (const auto& arities : test::small_grids()) {
    const auto grid = make_grid(arities);
    for (int j = 0; j <= grid.max_weight(); ++j) {
      CHECK(test::raw(enumerate_layer(grid, j)) == oracle::layers(arities, {j}));
    }
  }
}

TEST_CASE("weight") {
  CHECK(weight({0, 0}) == 0);
  CHECK(weight({2, 1}) == 3);
  CHECK(weight({1, 1, 1}) == 3);
}

TEST_CASE("lex weight") {
  CHECK(lex_weight(make_grid({3, 3}), {0, 0}) == 0);
  CHECK(lex_weight(make_grid({3, 3}), {1, 2}) == 5);
  CHECK(lex_weight(make_grid({2, 4}), {1, 3}) == 7);
  CHECK(test::kind_of([] { lex_weight(make_grid({2, 4}), {2, 0}); }) == ErrorKind::PointNotInGrid);

  for (const auto& arities : test::small_grids()) {
    const auto grid = make_grid(arities);
    const auto pts = enumerate_points(grid);
    CHECK(test::raw(pts) == oracle::points(arities));
    for (std::size_t i = 1; i < pts.size(); ++i) {
      CHECK(pts[i - 1] < pts[i]);
      CHECK(lex_weight(grid, pts[i - 1]) < lex_weight(grid, pts[i]));
    }
  }
}

TEST_CASE("lex predecessor and successor") {
  const auto g = make_grid({3, 3});
  CHECK(lex_predecessor(g, {1, 0}) == GridPoint{0, 2});
  CHECK_FALSE(lex_predecessor(g, {0, 0}).has_value());
  CHECK(lex_predecessor(make_grid({2, 2}), {1, 1}) == GridPoint{1, 0});
  CHECK(test::kind_of([&] { lex_predecessor(g, {3, 0}); }) == ErrorKind::PointNotInGrid);

  for (const auto& arities : test::small_grids()) {
    const auto grid = make_grid(arities);
    for (const auto& p : enumerate_points(grid)) {
      const auto pred = lex_predecessor(grid, p);
      if (p.is_zero()) {
        CHECK_FALSE(pred.has_value());
        continue;
      }
      REQUIRE(pred.has_value());
      CHECK(lex_successor(grid, *pred) == p);
    }
  }
}

TEST_CASE("SU2 predicate") {
  CHECK(is_su2(make_grid({2, 2, 2})));
  CHECK_FALSE(is_su2(make_grid({4})));
  CHECK(is_su2(make_grid({3, 3})));
  CHECK_FALSE(is_su2(make_grid({2, 4})));  // 1,2,2,2,1
  CHECK(is_su2(make_grid({2})));
}

TEST_CASE("unfold weight set") {
  CHECK(unfold_weight_set(make_grid({3, 3}), {}).empty());
  CHECK(unfold_weight_set(make_grid({3, 3}), {0, 4}) == std::vector<GridPoint>{{0, 0}, {2, 2}});
  CHECK(unfold_weight_set(make_grid({2, 2}), {1}) == std::vector<GridPoint>{{0, 1}, {1, 0}});
  CHECK(test::kind_of([] { unfold_weight_set(make_grid({2, 2}), {3}); }) == ErrorKind::WeightOutOfRange);
}

TEST_CASE("weight sets") {
  const WeightSet e{4, 0, 2, 2, 3};
  CHECK(e.members() == std::vector<int>{0, 2, 3, 4});
  CHECK(to_string(e) == "0,2-4");
  CHECK(to_string(WeightSet{}).empty());
  CHECK(WeightSet::from_mask(e.mask()) == e);
  CHECK(WeightSet::interval(3, 2).empty());
  CHECK(WeightSet::interval(1, 3) == WeightSet{1, 2, 3});
  CHECK(e.without({2, 3}) == WeightSet{0, 4});
  CHECK(e.intersected({1, 2}) == WeightSet{2});
  CHECK(WeightSet{1}.united({0}) == WeightSet{0, 1});
  CHECK(WeightSet{2}.is_subset_of(e));
  CHECK(test::kind_of([] { WeightSet{-1}; }) == ErrorKind::WeightOutOfRange);
  CHECK(test::kind_of([&] { e.require_within(3); }) == ErrorKind::WeightOutOfRange);
}

TEST_CASE("parsing") {
  CHECK(parse_grid("3,3") == make_grid({3, 3}));
  CHECK(parse_grid(" 2, 2 ,2") == make_grid({2, 2, 2}));
  CHECK(parse_weight_set("0,2-4,7") == WeightSet{0, 2, 3, 4, 7});
  CHECK(parse_weight_set("").empty());
  CHECK(test::kind_of([] { parse_grid("3,x"); }) == ErrorKind::ParseError);
  CHECK(test::kind_of([] { parse_grid(""); }) == ErrorKind::ParseError);
  CHECK(test::kind_of([] { parse_grid("3,1"); }) == ErrorKind::AritySmallerThanTwo);
  CHECK(test::kind_of([] { parse_weight_set("4-2"); }) == ErrorKind::ParseError);
  CHECK(test::kind_of([] { parse_weight_set("1,,2"); }) == ErrorKind::ParseError);
  CHECK(parse_weight_set(to_string(WeightSet{0, 1, 2, 5, 7, 8})) == WeightSet{0, 1, 2, 5, 7, 8});
}
