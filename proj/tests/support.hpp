// Generators and brute-force oracles shared by the test suites. Nothing here
// calls the library routine it is used to check.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "knotforms/matrix.hpp"

namespace knotforms::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

/// Product of random elementary row operations and swaps: det = +-1.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 12) {
  IntMatrix p = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && uniform(rng, 0, 1)) p(0, 0) = -1;
    return p;
  }
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    switch (uniform(rng, 0, 2)) {
      case 0:
        p.swap_rows(i, j);
        break;
      case 1:
        for (std::size_t k = 0; k < n; ++k) p(i, k) += p(j, k);
        break;
      default:
        for (std::size_t k = 0; k < n; ++k) p(i, k) -= p(j, k);
    }
  }
  return p;
}

/// Cofactor expansion; independent of the Bareiss code.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    Integer term = m(0, c) * cofactor_det(minor);
    sum += c % 2 == 0 ? term : Integer(-term);
  }
  return sum;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Invariant factors from determinantal divisors: D_k = gcd of k x k minors,
/// d_k = D_k / D_{k-1}.
inline std::vector<Integer> determinantal_invariants(const IntMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        IntMatrix sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(ri[a], ci[b]);
        g = gcd(g, cofactor_det(sub));
      }
    if (g == 0) {
      for (; k <= r; ++k) out.push_back(0);
      break;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Signed B_0..B_n from sum_{j=0}^{m} C(m+1, j) B_j = 0.
inline std::vector<Rational> signed_bernoulli(int n) {
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    Integer c = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      s += Rational(c) * b[static_cast<std::size_t>(j)];
      c = c * (m + 1 - j) / (j + 1);
    }
    b[static_cast<std::size_t>(m)] = -s / Rational(m + 1);
    b[static_cast<std::size_t>(m)].canonicalize();
  }
  return b;
}

}  // namespace knotforms::testing
