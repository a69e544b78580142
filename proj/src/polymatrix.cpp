#include "knotforms/polymatrix.hpp"

#include <algorithm>
#include <cstdint>

namespace knotforms {

LaurentMatrix pencil(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("pencil: shapes differ");
  LaurentMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      LaurentPolynomial p = LaurentPolynomial::monomial(a(i, j), 1);
      p.add_term(0, b(i, j));
      m(i, j) = std::move(p);
    }
  return m;
}

LaurentPolynomial det(const LaurentMatrix& m) {
  return bareiss_det(m, [](const LaurentPolynomial& x, const LaurentPolynomial& d) { return divexact(x, d); });
}

RatLaurent interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolate: point count mismatch");
  const std::size_t n = xs.size();
  // Newton divided differences, then Horner expansion into the monomial basis.
  std::vector<Rational> c = ys;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      if (xs[i] == xs[i - k]) throw DomainError("interpolate: repeated abscissa");
      c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - k]);
    }
  RatLaurent p;
  for (std::size_t k = n; k-- > 0;) {
    RatLaurent factor = RatLaurent::t();
    factor.add_term(0, Rational(-xs[k]));
    p = p * factor + RatLaurent(c[k]);
  }
  return p;
}

namespace {

// 0, 1, -1, 2, -2, ... keeps evaluated entries small.
std::vector<Rational> sample_points(std::size_t count) {
  std::vector<Rational> xs;
  for (long k = 0; xs.size() < count; ++k) {
    xs.emplace_back(k);
    if (k != 0 && xs.size() < count) xs.emplace_back(-k);
  }
  return xs;
}

}  // namespace

LaurentPolynomial pencil_det(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("pencil_det: needs two square matrices of equal size");
  const std::size_t n = a.rows();
  std::vector<Rational> xs = sample_points(n + 1);
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) {
    const Integer xi = x.get_num();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = xi * a(i, j) + b(i, j);
    ys.emplace_back(det(m));
  }
  return to_integer(interpolate(xs, ys));
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1u) r = mulmod(r, a, p);
  return r;
}

u64 reduce(const Integer& z, u64 p) {
  Integer r = mod_floor(z, Integer(static_cast<unsigned long>(p)));
  return r.get_ui();
}

// Characteristic polynomial over Z/p (ascending coefficients) by reduction
// to upper Hessenberg form followed by the Hessenberg recurrence.
std::vector<u64> charpoly_mod(const IntMatrix& m, u64 p) {
  const std::size_t n = m.rows();
  std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = reduce(m(i, j), p);

  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      std::swap(h[piv], h[c + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][c + 1]);
    }
    const u64 inv = powmod(h[c + 1][c], p - 2, p);
    for (std::size_t r = c + 2; r < n; ++r) {
      if (h[r][c] == 0) continue;
      const u64 u = mulmod(h[r][c], inv, p);
      // row_r -= u row_{c+1}, then col_{c+1} += u col_r keeps the similarity.
      for (std::size_t j = 0; j < n; ++j) h[r][j] = (h[r][j] + p - mulmod(u, h[c + 1][j], p)) % p;
      for (std::size_t i = 0; i < n; ++i) h[i][c + 1] = (h[i][c + 1] + mulmod(u, h[i][r], p)) % p;
    }
  }

  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t kk = k - 1;
    std::vector<u64> next(k + 1, 0);
    const auto& prev = polys[k - 1];
    for (std::size_t e = 0; e < prev.size(); ++e) {
      next[e + 1] = (next[e + 1] + prev[e]) % p;
      next[e] = (next[e] + p - mulmod(h[kk][kk], prev[e], p)) % p;
    }
    u64 prod = 1;
    for (std::size_t i = kk; i-- > 0;) {
      prod = mulmod(prod, h[i + 1][i], p);
      if (prod == 0) break;
      const u64 coef = mulmod(h[i][kk], prod, p);
      if (coef == 0) continue;
      for (std::size_t e = 0; e < polys[i].size(); ++e) next[e] = (next[e] + p - mulmod(coef, polys[i][e], p)) % p;
    }
    polys[k] = std::move(next);
  }
  return polys[n];
}

// Characteristic polynomial of an integer matrix by Chinese remaindering.
// Every eigenvalue is bounded by the row-sum norm R, so the coefficient of
// x^{n-k} is at most C(n, k) R^k and all are below (1 + R)^n.
std::vector<Integer> integer_charpoly(const IntMatrix& m) {
  const std::size_t n = m.rows();
  Integer r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) row += abs(m(i, j));
    if (row > r) r = row;
  }
  Integer bound;
  mpz_pow_ui(bound.get_mpz_t(), Integer(r + 1).get_mpz_t(), static_cast<unsigned long>(n));
  bound *= 2;

  std::vector<Integer> coeffs(n + 1, 0);
  Integer modulus = 1;
  Integer prime = Integer(1) << 62;
  while (modulus <= bound) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const u64 p = prime.get_ui();
    std::vector<u64> residues = charpoly_mod(m, p);
    // Incremental CRT: c' = c + modulus * ((r - c) / modulus mod p).
    const u64 inv = powmod(reduce(modulus, p), p - 2, p);
    for (std::size_t e = 0; e <= n; ++e) {
      const u64 diff = (residues[e] + p - reduce(coeffs[e], p)) % p;
      coeffs[e] += modulus * Integer(static_cast<unsigned long>(mulmod(diff, inv, p)));
    }
    modulus *= prime;
  }
  const Integer half = modulus / 2;
  for (auto& c : coeffs)
    if (c > half) c -= modulus;
  return coeffs;
}

}  // namespace

RatLaurent characteristic_polynomial(const RatMatrix& h) {
  if (!h.is_square()) throw DomainError("characteristic_polynomial: non-square matrix");
  const std::size_t n = h.rows();
  // h = m / d with m integral; det(x - h) = d^{-n} det(d x - m).
  Integer d = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), h(i, j).get_den_mpz_t());
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = h(i, j).get_num() * (d / h(i, j).get_den());
  std::vector<Integer> c = integer_charpoly(m);
  RatLaurent out;
  Integer scale = 1;  // d^{n-e} for the coefficient of x^e, built from the top
  for (std::size_t e = n + 1; e-- > 0;) {
    Rational coeff(c[e], scale);
    coeff.canonicalize();
    out.add_term(static_cast<int>(e), coeff);
    scale *= d;
  }
  return out;
}

namespace {

int degree(const RatLaurent& p) { return p.is_zero() ? -1 : p.max_exponent(); }

}  // namespace

std::vector<RatLaurent> elementary_divisors_Qt(const RatLaurentMatrix& input) {
  if (!input.is_square()) throw DomainError("elementary_divisors_Qt: non-square matrix");
  RatLaurentMatrix m = input;
  const std::size_t n = m.rows();
  // Multiplying a row by a power of t is a unit operation; afterwards every
  // entry lies in Q[t] and the Euclidean algorithm by degree applies.
  for (std::size_t i = 0; i < n; ++i) {
    int lo = 0;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) {
        lo = any ? std::min(lo, m(i, j).min_exponent()) : m(i, j).min_exponent();
        any = true;
      }
    if (any && lo != 0)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, j).shifted(-lo);
  }

  auto sub_row = [&](std::size_t target, std::size_t source, const RatLaurent& q) {
    for (std::size_t j = 0; j < n; ++j)
      if (!m(source, j).is_zero()) m(target, j) -= q * m(source, j);
  };
  auto sub_col = [&](std::size_t target, std::size_t source, const RatLaurent& q) {
    for (std::size_t i = 0; i < n; ++i)
      if (!m(i, source).is_zero()) m(i, target) -= m(i, source) * q;
  };

  std::vector<RatLaurent> diagonal;
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Smallest-degree nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!m(i, j).is_zero() && (pi == n || degree(m(i, j)) < degree(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == n) break;
      m.swap_rows(k, pi);
      m.swap_cols(k, pj);
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m(i, k).is_zero()) continue;
        auto [q, r] = divmod(m(i, k), m(k, k));
        sub_row(i, k, q);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m(k, j).is_zero()) continue;
        auto [q, r] = divmod(m(k, j), m(k, k));
        sub_col(j, k, q);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into the pivot row and reduce again.
      std::size_t bad = n;
      for (std::size_t i = k + 1; i < n && bad == n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!m(i, j).is_zero() && !divmod(m(i, j), m(k, k)).second.is_zero()) {
            bad = i;
            break;
          }
      if (bad == n) break;
      for (std::size_t j = 0; j < n; ++j) m(k, j) += m(bad, j);
    }
    diagonal.push_back(m(k, k).is_zero() ? RatLaurent() : monic_unit_normal(m(k, k)));
  }

  std::vector<RatLaurent> out;
  for (const auto& d : diagonal)
    if (d.is_zero() || d.max_exponent() > 0) out.push_back(d);
  // Nonzero factors come first in the chain; zero (free) summands last.
  std::stable_sort(out.begin(), out.end(), [](const RatLaurent& a, const RatLaurent& b) {
    if (a.is_zero() != b.is_zero()) return b.is_zero();
    return degree(a) < degree(b);
  });
  return out;
}

std::vector<RatLaurent> elementary_divisors_Qt(const LaurentMatrix& m) {
  return elementary_divisors_Qt(m.map<RatLaurent>([](const LaurentPolynomial& p) { return to_rational(p); }));
}

}  // namespace knotforms
