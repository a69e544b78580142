#pragma once

#include <vector>

#include "knotforms/laurent.hpp"
#include "knotforms/matrix.hpp"

namespace knotforms {

using LaurentMatrix = Matrix<LaurentPolynomial>;
using RatLaurentMatrix = Matrix<RatLaurent>;

/// The matrix t*a + b.
LaurentMatrix pencil(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free determinant over Z[t, t^-1].
LaurentPolynomial det(const LaurentMatrix& m);

/// Determinant of t*a + b by evaluation at rank+1 integer points and exact
/// interpolation. Agrees with det(pencil(a, b)).
LaurentPolynomial pencil_det(const IntMatrix& a, const IntMatrix& b);

/// Unique polynomial of degree < xs.size() through the given points.
RatLaurent interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// det(t*I - h), monic of degree rank(h).
RatLaurent characteristic_polynomial(const RatMatrix& h);

/// Invariant factors of the Q[t, t^-1]-module presented by a square matrix:
/// a divisibility chain of monic polynomials with nonzero constant term.
/// Unit factors are dropped; a zero entry stands for a free summand.
std::vector<RatLaurent> elementary_divisors_Qt(const RatLaurentMatrix& m);
std::vector<RatLaurent> elementary_divisors_Qt(const LaurentMatrix& m);

}  // namespace knotforms
