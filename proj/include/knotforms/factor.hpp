#pragma once

#include <utility>
#include <vector>

#include "knotforms/laurent.hpp"

namespace knotforms {

/// p = unit_sign * t^unit_shift * content * prod f_i^{m_i}, with every f_i an
/// irreducible primitive polynomial of Z[t] with positive leading coefficient
/// and nonzero constant term. Factors are sorted by degree, then coefficients.
struct Factorization {
  int unit_sign = 1;
  int unit_shift = 0;
  Integer content = 1;
  std::vector<std::pair<LaurentPolynomial, int>> factors;

  LaurentPolynomial product() const;
};

/// Complete factorization over Z[t] after stripping the Laurent unit.
/// Throws DomainError on the zero polynomial.
Factorization factor_int_poly(const LaurentPolynomial& p);

/// Euler's totient.
long euler_phi(long n);

/// The n-th cyclotomic polynomial, n >= 1.
LaurentPolynomial cyclotomic_polynomial(long n);

/// Orders n of the cyclotomic polynomials whose product (with multiplicity)
/// equals p up to units, or nothing if p has a non-cyclotomic factor.
struct CyclotomicSplit {
  bool complete = false;
  std::vector<long> orders;
  LaurentPolynomial remainder;
};
CyclotomicSplit split_cyclotomic(const LaurentPolynomial& p);

}  // namespace knotforms
