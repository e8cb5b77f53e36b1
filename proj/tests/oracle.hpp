// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond plain data types: points are enumerated by
// nested counting, ranks come from textbook Gaussian elimination over mpq,
// and closures from the definition H(S u {x}) = H(S).
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Point = std::vector<int>;

inline std::vector<Point> points(const std::vector<int>& arities) {
  std::vector<Point> out{{}};
  for (int k : arities) {
    std::vector<Point> next;
    for (const auto& p : out) {
      for (int c = 0; c < k; ++c) {
        auto q = p;
        q.push_back(c);
        next.push_back(q);
      }
    }
    out = next;
  }
  return out;
}

inline int weight(const Point& p) {
  int w = 0;
  for (int c : p) w += c;
  return w;
}

inline int max_weight(const std::vector<int>& arities) {
  int n = 0;
  for (int k : arities) n += k - 1;
  return n;
}

inline std::vector<long> layer_sizes(const std::vector<int>& arities) {
  std::vector<long> out(static_cast<std::size_t>(max_weight(arities)) + 1, 0);
  for (const auto& p : points(arities)) ++out[static_cast<std::size_t>(weight(p))];
  return out;
}

inline std::vector<Point> layers(const std::vector<int>& arities, const std::set<int>& weights) {
  std::vector<Point> out;
  for (const auto& p : points(arities)) {
    if (weights.count(weight(p))) out.push_back(p);
  }
  return out;
}

inline mpz_class falling(const Point& alpha, const Point& beta) {
  mpz_class out = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (int j = 0; j < alpha[i]; ++j) out *= beta[i] - j;
  }
  return out;
}

inline mpz_class power(const Point& alpha, const Point& x) {
  mpz_class out = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (int j = 0; j < alpha[i]; ++j) out *= x[i];
  }
  return out;
}

inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// rank of the falling-factorial rows alpha (weight <= d) evaluated on S.
inline std::size_t hilbert(const std::vector<int>& arities, int d, const std::vector<Point>& s) {
  std::vector<std::vector<mpq_class>> m;
  for (const auto& alpha : points(arities)) {
    if (weight(alpha) > d) continue;
    std::vector<mpq_class> row;
    for (const auto& x : s) row.emplace_back(falling(alpha, x));
    m.push_back(row);
  }
  return rank(m);
}

inline std::size_t hilbert(const std::vector<int>& arities, int d, const std::set<int>& e) {
  return hilbert(arities, d, layers(arities, e));
}

inline std::set<int> zstar(const std::vector<int>& arities, int d, const std::set<int>& e) {
  const auto s = layers(arities, e);
  if (s.empty()) return {};
  const auto h = hilbert(arities, d, s);
  std::set<int> out;
  for (int j = 0; j <= max_weight(arities); ++j) {
    bool all = true;
    for (const auto& x : layers(arities, {j})) {
      auto t = s;
      t.push_back(x);
      all = all && hilbert(arities, d, t) == h;
    }
    if (all) out.insert(j);
  }
  return out;
}

inline std::set<int> lbar(int n, int d, std::set<int> e) {
  while (true) {
    std::vector<int> t(e.begin(), e.end());
    const int s = static_cast<int>(t.size());
    std::set<int> next = e;
    if (s > d) {
      for (int j = 0; j <= t[static_cast<std::size_t>(s - d - 1)]; ++j) next.insert(j);
      for (int j = t[static_cast<std::size_t>(d)]; j <= n; ++j) next.insert(j);
    }
    if (next == e) return e;
    e = next;
  }
}

/// Standard monomials under lex: scan grid monomials in ascending lex order,
/// keep those whose evaluation vector raises the rank.
inline std::set<Point> standard_monomials(const std::vector<int>& arities, const std::vector<Point>& a) {
  std::set<Point> out;
  std::vector<std::vector<mpq_class>> kept;
  for (const auto& alpha : points(arities)) {
    std::vector<mpq_class> row;
    for (const auto& x : a) row.emplace_back(power(alpha, x));
    auto trial = kept;
    trial.push_back(row);
    if (rank(trial) > kept.size()) {
      kept = trial;
      out.insert(alpha);
    }
  }
  return out;
}

}  // namespace oracle
