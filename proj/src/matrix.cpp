#include <gridhilbert/errors.hpp>
#include <gridhilbert/matrix.hpp>

#include <algorithm>

namespace gridhilbert {

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

void require_distinct(std::vector<GridPoint> labels, const char* axis) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw Error(ErrorKind::DuplicateLabel, std::string("repeated ") + axis + " label");
  }
}

void require_permutation(std::span<const std::size_t> order, std::size_t n) {
  if (order.size() != n) throw Error(ErrorKind::BadPermutation, "order has wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t i : order) {
    if (i >= n || seen[i]) throw Error(ErrorKind::BadPermutation, "order is not a permutation");
    seen[i] = true;
  }
}

std::vector<GridPoint> index_labels(std::size_t n) {
  std::vector<GridPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(GridPoint{static_cast<int>(i)});
  return out;
}

// Fraction-free elimination in place on a row-major integer matrix.
RankResult bareiss(std::vector<BigInt>& a, std::size_t rows, std::size_t cols) {
  RankResult out;
  BigInt prev = 1;
  BigInt tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p * cols + c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) swap(a[p * cols + j], a[r * cols + j]);
    }
    const BigInt& pivot = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      BigInt& lead = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt& x = a[i * cols + j];
        mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), x.get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), a[r * cols + j].get_mpz_t());
        mpz_divexact(x.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = pivot;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

}  // namespace

ExactMatrix::ExactMatrix(std::vector<GridPoint> row_labels, std::vector<GridPoint> col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  require_distinct(row_labels_, "row");
  require_distinct(col_labels_, "column");
  entries_.assign(row_labels_.size() * col_labels_.size(), Rational(0));
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(index_labels(rows.size()), index_labels(n_cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n_cols) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < n_cols; ++c) {
      m(r, c) = rows[r][c];
      m(r, c).canonicalize();
    }
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::vector<GridPoint> labels) {
  ExactMatrix m(labels, labels);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(col_labels_, row_labels_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ExactMatrix ExactMatrix::scaled(const Rational& factor) const {
  ExactMatrix out = *this;
  for (auto& e : out.entries_) e *= factor;
  return out;
}

ExactMatrix ExactMatrix::permuted_rows(std::span<const std::size_t> order) const {
  require_permutation(order, rows());
  std::vector<GridPoint> labels;
  for (std::size_t i : order) labels.push_back(row_labels_[i]);
  ExactMatrix out(std::move(labels), col_labels_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) out(r, c) = (*this)(order[r], c);
  }
  return out;
}

ExactMatrix ExactMatrix::permuted_cols(std::span<const std::size_t> order) const {
  require_permutation(order, cols());
  std::vector<GridPoint> labels;
  for (std::size_t i : order) labels.push_back(col_labels_[i]);
  ExactMatrix out(row_labels_, std::move(labels));
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) out(r, c) = (*this)(r, order[c]);
  }
  return out;
}

std::string ExactMatrix::dump() const {
  std::string out;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      if (c > 0) out += ' ';
      out += to_fraction_string((*this)(r, c));
    }
    out += '\n';
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) +
                                                  " times " + std::to_string(rhs.rows()) + "x" +
                                                  std::to_string(rhs.cols()));
  }
  ExactMatrix out(lhs.row_labels(), rhs.col_labels());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Rational& a = lhs(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

RankResult rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<BigInt> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt scale = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& q = m(r, c);
      if (scale == 1) {
        a[r * cols + c] = q.get_num();
      } else {
        a[r * cols + c] = q.get_num() * (scale / q.get_den());
      }
    }
  }
  return bareiss(a, rows, cols);
}

std::vector<GridPoint> pivot_columns_in_order(const ExactMatrix& m, std::span<const std::size_t> order) {
  const ExactMatrix permuted = m.permuted_cols(order);
  std::vector<GridPoint> out;
  for (std::size_t c : rank(permuted).pivot_cols) out.push_back(permuted.col_labels()[c]);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt falling_factorial_value(const GridPoint& alpha, const GridPoint& beta) {
  if (alpha.size() != beta.size()) throw Error(ErrorKind::LengthMismatch, "alpha and beta differ in length");
  BigInt value = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] > beta[i]) return 0;
    for (int t = 0; t < alpha[i]; ++t) value *= beta[i] - t;
  }
  return value;
}

BigInt point_factorial(const GridPoint& alpha) { return falling_factorial_value(alpha, alpha); }

ExactMatrix eval_matrix(std::vector<GridPoint> rows, std::vector<GridPoint> cols) {
  ExactMatrix m(std::move(rows), std::move(cols));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m(r, c) = Rational(falling_factorial_value(m.row_labels()[r], m.col_labels()[c]));
    }
  }
  return m;
}

ExactMatrix eval_matrix(const UniformGrid& grid, const WeightSet& row_weights, const WeightSet& col_weights) {
  return eval_matrix(unfold_weight_set(grid, row_weights), unfold_weight_set(grid, col_weights));
}

ExactMatrix up_matrix(const UniformGrid& grid, int d) {
  if (d < 0 || d >= grid.max_weight()) {
    throw Error(ErrorKind::WeightOutOfRange,
                "up operator needs 0 <= d <= " + std::to_string(grid.max_weight() - 1));
  }
  ExactMatrix m(enumerate_layer(grid, d), enumerate_layer(grid, d + 1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (dominated_by(m.row_labels()[r], m.col_labels()[c])) m(r, c) = 1;
    }
  }
  return m;
}

ExactMatrix diag_matrix(const UniformGrid& grid, int w) {
  auto layer = enumerate_layer(grid, w);
  ExactMatrix m(layer, layer);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = Rational(point_factorial(layer[i]));
  return m;
}

std::size_t SpanBuilder::reduce(std::vector<BigInt>& v) const {
  if (v.size() != length_) throw Error(ErrorKind::LengthMismatch, "vector length differs from span length");
  BigInt g, f, h;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    const auto& b = basis_[k];
    // v <- (b[p]/g) v - (v[p]/g) b with g = gcd(b[p], v[p])
    mpz_gcd(g.get_mpz_t(), b[p].get_mpz_t(), v[p].get_mpz_t());
    mpz_divexact(f.get_mpz_t(), b[p].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(h.get_mpz_t(), v[p].get_mpz_t(), g.get_mpz_t());
    for (std::size_t j = 0; j < length_; ++j) {
      if (f != 1) v[j] *= f;
      if (j >= p && sgn(b[j]) != 0) mpz_submul(v[j].get_mpz_t(), h.get_mpz_t(), b[j].get_mpz_t());
    }
  }
  std::size_t first = length_;
  BigInt content = 0;
  for (std::size_t j = 0; j < length_; ++j) {
    if (sgn(v[j]) == 0) continue;
    if (first == length_) first = j;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v[j].get_mpz_t());
  }
  if (content > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  return first;
}

bool SpanBuilder::insert(std::vector<BigInt> v) {
  const std::size_t first = reduce(v);
  if (first == length_) return false;
  basis_.push_back(std::move(v));
  pivots_.push_back(first);
  return true;
}

bool SpanBuilder::contains(std::vector<BigInt> v) const { return reduce(v) == length_; }

}  // namespace gridhilbert
