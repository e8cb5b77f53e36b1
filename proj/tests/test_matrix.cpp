#include <gridhilbert/matrix.hpp>

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace gridhilbert;

namespace {

std::vector<std::vector<mpq_class>> entries(const ExactMatrix& m) {
  std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  }
  return out;
}

ExactMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<std::vector<Rational>> data(rows, std::vector<Rational>(cols));
  for (auto& row : data) {
    for (auto& x : row) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
  }
  // Force some dependent rows so that ranks below full show up.
  if (rows >= 3) {
    for (std::size_t c = 0; c < cols; ++c) data[2][c] = data[0][c] * Rational(2, 3) - data[1][c];
  }
  return ExactMatrix::from_rows(data);
}

}  // namespace

TEST_CASE("falling factorial") {
  CHECK(falling_factorial_value({0, 0}, {2, 1}) == 1);
  CHECK(falling_factorial_value({1, 0}, {2, 1}) == 2);
  CHECK(falling_factorial_value({2, 2}, {2, 1}) == 0);
  CHECK(falling_factorial_value({3}, {5}) == 60);
  CHECK(point_factorial({3, 2}) == 12);
  CHECK(test::kind_of([] { falling_factorial_value({1}, {1, 1}); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("evaluation matrix") {
  const auto m = eval_matrix(make_grid({2, 2}), {2}, {2});
  CHECK(m.rows() == 1);
  CHECK(m(0, 0) == 1);

  const auto row = eval_matrix(make_grid({2, 2}), {0}, {1});
  CHECK(row.rows() == 1);
  CHECK(row.cols() == 2);
  CHECK(row(0, 0) == 1);
  CHECK(row(0, 1) == 1);

  const auto e = eval_matrix(make_grid({3, 3}), {1}, {2});
  CHECK(e.row_labels() == std::vector<GridPoint>{{0, 1}, {1, 0}});
  CHECK(e.col_labels() == std::vector<GridPoint>{{0, 2}, {1, 1}, {2, 0}});
  const std::vector<std::vector<int>> expected{{2, 1, 0}, {0, 1, 2}};
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(e(r, c) == expected[r][c]);
  }
  CHECK(test::kind_of([] { eval_matrix(make_grid({2, 2}), {3}, {0}); }) == ErrorKind::WeightOutOfRange);
}

TEST_CASE("up matrix") {
  const auto u0 = up_matrix(make_grid({2, 2}), 0);
  CHECK(u0.rows() == 1);
  CHECK(u0(0, 0) == 1);
  CHECK(u0(0, 1) == 1);

  const auto u1 = up_matrix(make_grid({3, 3}), 1);
  const std::vector<std::vector<int>> expected{{1, 1, 0}, {0, 1, 1}};
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(u1(r, c) == expected[r][c]);
  }
  CHECK(rank(u1).rank == 2);
  CHECK(test::kind_of([] { up_matrix(make_grid({3, 3}), 4); }) == ErrorKind::WeightOutOfRange);
  CHECK(test::kind_of([] { up_matrix(make_grid({3, 3}), -1); }) == ErrorKind::WeightOutOfRange);
}

TEST_CASE("diag matrix is the square evaluation block") {
  for (const auto& arities : test::small_grids()) {
    const auto grid = make_grid(arities);
    for (int w = 0; w <= grid.max_weight(); ++w) {
      const auto d = diag_matrix(grid, w);
      CHECK(d == eval_matrix(grid, {w}, {w}));
      CHECK(rank(d).rank == d.rows());
    }
  }
}

TEST_CASE("rank basics") {
  CHECK(rank(ExactMatrix()).rank == 0);
  const auto one = ExactMatrix::from_rows({{1, 1}, {1, 1}});
  const auto r = rank(one);
  CHECK(r.rank == 1);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0});

  const std::vector<std::size_t> reversed{1, 0};
  CHECK(pivot_columns_in_order(one, reversed) == std::vector<GridPoint>{{1}});
  const auto id = ExactMatrix::identity({{0}, {1}, {2}});
  const std::vector<std::size_t> natural{0, 1, 2};
  CHECK(pivot_columns_in_order(id, natural).size() == 3);
  const auto zero = ExactMatrix::from_rows({{0, 0}, {0, 0}});
  CHECK(pivot_columns_in_order(zero, reversed).empty());
  const std::vector<std::size_t> bad{0, 0};
  CHECK(test::kind_of([&] { pivot_columns_in_order(one, bad); }) == ErrorKind::BadPermutation);

  CHECK(rank(ExactMatrix::from_rows({{Rational(1, 2), Rational(1, 3)}, {3, 2}})).rank == 1);
  CHECK(rank(ExactMatrix::from_rows({{0, 0, 5}, {0, 1, 0}})).pivot_cols == std::vector<std::size_t>{1, 2});
}

TEST_CASE("rank properties against Gaussian elimination") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    const auto m = random_matrix(rng, rows, cols);
    const auto r = rank(m).rank;
    CHECK(r == oracle::rank(entries(m)));
    CHECK(r == rank(m.transposed()).rank);
    CHECK(r <= std::min(rows, cols));

    std::vector<std::size_t> row_order(rows);
    std::iota(row_order.begin(), row_order.end(), 0);
    std::shuffle(row_order.begin(), row_order.end(), rng);
    std::vector<std::size_t> col_order(cols);
    std::iota(col_order.begin(), col_order.end(), 0);
    std::shuffle(col_order.begin(), col_order.end(), rng);
    CHECK(rank(m.permuted_rows(row_order).permuted_cols(col_order)).rank == r);
    CHECK(rank(m.scaled(Rational(-5, 7))).rank == r);

    auto scaled_row = m;
    for (std::size_t c = 0; c < cols; ++c) scaled_row(0, c) *= Rational(11, 3);
    CHECK(rank(scaled_row).rank == r);

    // Leftmost greedy pivots: each pivot column raises the rank of the prefix.
    const auto pivots = rank(m).pivot_cols;
    CHECK(pivots.size() == r);
    std::size_t prefix_rank = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<std::vector<mpq_class>> sub;
      for (const auto& row : entries(m)) sub.emplace_back(row.begin(), row.begin() + static_cast<long>(c) + 1);
      const auto next = oracle::rank(sub);
      CHECK((next > prefix_rank) == std::binary_search(pivots.begin(), pivots.end(), c));
      prefix_rank = next;
    }
  }
}

TEST_CASE("products and dumps") {
  const auto a = ExactMatrix::from_rows({{1, 2}, {3, 4}});
  const auto b = ExactMatrix::from_rows({{0, 1}, {1, 0}});
  const auto p = a * b;
  CHECK(p(0, 0) == 2);
  CHECK(p(1, 1) == 3);
  CHECK(test::kind_of([&] { (void)(a * ExactMatrix::from_rows({{1, 2}})); }) == ErrorKind::DimensionMismatch);
  CHECK(ExactMatrix::from_rows({{Rational(1, 2), 0}, {-3, Rational(4, 6)}}).dump() == "1/2 0/1\n-3/1 2/3\n");
  CHECK(test::kind_of([] { ExactMatrix({{0}, {0}}, {{1}}); }) == ErrorKind::DuplicateLabel);
  const std::vector<std::size_t> short_order{0};
  CHECK(test::kind_of([&] { (void)a.permuted_rows(short_order); }) == ErrorKind::BadPermutation);
}

TEST_CASE("evaluation matrices match direct evaluation") {
  for (const auto& arities : test::small_grids()) {
    const auto grid = make_grid(arities);
    const int n = grid.max_weight();
    const auto m = eval_matrix(grid, WeightSet::interval(0, n), WeightSet::interval(0, n));
    const auto pts = oracle::points(arities);
    std::vector<oracle::Point> by_weight;
    for (int j = 0; j <= n; ++j) {
      for (const auto& p : oracle::layers(arities, {j})) by_weight.push_back(p);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) CHECK(m(r, c) == oracle::falling(by_weight[r], by_weight[c]));
    }
    // Falling factorials of weight <= N span all functions on the grid.
    CHECK(rank(m).rank == pts.size());
  }
}

TEST_CASE("span builder") {
  SpanBuilder span(3);
  CHECK(span.insert({2, 4, 6}));
  CHECK_FALSE(span.insert({1, 2, 3}));
  CHECK(span.contains({-3, -6, -9}));
  CHECK_FALSE(span.contains({0, 0, 1}));
  CHECK(span.insert({0, 0, 1}));
  CHECK(span.contains({1, 2, 0}));
  CHECK_FALSE(span.insert({0, 0, 0}));
  CHECK(span.rank() == 2);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> digit(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    SpanBuilder s(5);
    std::vector<std::vector<mpq_class>> rows;
    for (int k = 0; k < 6; ++k) {
      std::vector<BigInt> v(5);
      std::vector<mpq_class> q(5);
      for (std::size_t i = 0; i < 5; ++i) {
        const int x = (k % 2 == 0 && i == 4) ? 0 : digit(rng);
        v[i] = x;
        q[i] = x;
      }
      const auto before = oracle::rank(rows);
      rows.push_back(q);
      CHECK(s.insert(v) == (oracle::rank(rows) > before));
      CHECK(s.rank() == oracle::rank(rows));
    }
  }
}
