#include "knotforms/matrix.hpp"

#include <sstream>

namespace knotforms {

RatMatrix to_rational(const IntMatrix& m) {
  return m.map<Rational>([](const Integer& x) { return Rational(x); });
}

IntMatrix to_integer(const RatMatrix& m) {
  return m.map<Integer>([](const Rational& x) {
    if (!is_integral(x)) throw DomainError("matrix has a non-integral entry " + x.get_str());
    return Integer(x.get_num());
  });
}

Integer det(const IntMatrix& m) {
  return bareiss_det(m, [](const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  });
}

Rational det(const RatMatrix& input) {
  if (!input.is_square()) throw DomainError("determinant of a non-square matrix");
  RatMatrix m = input;
  const std::size_t n = m.rows();
  Rational d(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      m.swap_rows(p, k);
      d = -d;
    }
    d *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

RatMatrix inverse(const RatMatrix& input) {
  if (!input.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = input.rows();
  RatMatrix m = input;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw SingularMatrixError("matrix is singular (determinant 0)");
    m.swap_rows(p, k);
    inv.swap_rows(p, k);
    Rational pivot = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      Rational f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

IntMatrix kronecker(const IntMatrix& m, const IntMatrix& n) {
  IntMatrix out(m.rows() * n.rows(), m.cols() * n.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t k = 0; k < n.rows(); ++k)
        for (std::size_t l = 0; l < n.cols(); ++l)
          out(i * n.rows() + k, j * n.cols() + l) = m(i, j) * n(k, l);
  return out;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

namespace {

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

SmithDecomposition smith_decomposition(const IntMatrix& input) {
  const std::size_t r = input.rows();
  const std::size_t c = input.cols();
  IntMatrix d = input;
  IntMatrix left = IntMatrix::identity(r);
  IntMatrix right = IntMatrix::identity(c);
  const std::size_t diag = std::min(r, c);

  for (std::size_t t = 0; t < diag; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = r, pj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (d(i, j) != 0 && (pi == r || abs(d(i, j)) < abs(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == r) break;
    d.swap_rows(t, pi);
    left.swap_rows(t, pi);
    d.swap_cols(t, pj);
    right.swap_cols(t, pj);

    for (bool clean = false; !clean;) {
      clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row_multiple(d, i, t, -q);
        add_row_multiple(left, i, t, -q);
        if (d(i, t) != 0) {
          d.swap_rows(i, t);
          left.swap_rows(i, t);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col_multiple(d, j, t, -q);
        add_col_multiple(right, j, t, -q);
        if (d(t, j) != 0) {
          d.swap_cols(j, t);
          right.swap_cols(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide the whole trailing block for the divisibility chain.
      for (std::size_t i = t + 1; i < r && clean; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            add_row_multiple(d, t, i, Integer(1));
            add_row_multiple(left, t, i, Integer(1));
            clean = false;
            break;
          }
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < r; ++j) left(t, j) = -left(t, j);
    }
  }
  return {std::move(left), std::move(d), std::move(right)};
}

std::vector<Integer> smith_normal_form(const IntMatrix& m) {
  SmithDecomposition s = smith_decomposition(m);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) out.push_back(s.diagonal(i, i));
  return out;
}

std::size_t rank(const IntMatrix& input) {
  RatMatrix m = to_rational(input);
  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.cols() && rk < m.rows(); ++col) {
    std::size_t p = rk;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, rk);
    for (std::size_t i = rk + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(rk, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rk, j);
    }
    ++rk;
  }
  return rk;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace knotforms
