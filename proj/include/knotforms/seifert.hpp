#pragma once

#include <vector>

#include "knotforms/laurent.hpp"
#include "knotforms/matrix.hpp"
#include "knotforms/polymatrix.hpp"

namespace knotforms {

/// Seifert matrix A of a (2q-1)-dimensional link in S^{2q+1}. The full q is
/// kept because handle framings depend on more than its parity.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  SeifertMatrix(IntMatrix a, int q);

  const IntMatrix& matrix() const { return a_; }
  int q() const { return q_; }
  /// (-1)^q
  int epsilon() const { return q_ % 2 == 0 ? 1 : -1; }
  std::size_t rank() const { return a_.rows(); }

 private:
  IntMatrix a_;
  int q_ = 1;
};

/// Raised when Conway normalization is impossible: Delta(1) is not +-1 or the
/// polynomial has no symmetric representative.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// I = (-1)^q (A + (-1)^q A^T).
IntMatrix intersection_form(const SeifertMatrix& s);

/// det I = +-1.
bool is_unimodular(const SeifertMatrix& s);

/// det A = +-1, the page of a simple fibered link.
bool is_fibered_form(const SeifertMatrix& s);

/// h = (-1)^{q+1} (A^T)^{-1} A. Throws SingularMatrixError when det A = 0.
RatMatrix monodromy(const SeifertMatrix& s);

enum class Normalization { raw, conway };

/// raw: det(tA + (-1)^q A^T) verbatim. conway: the unit multiple with
/// Delta(t^-1) = Delta(t) and Delta(1) = 1.
LaurentPolynomial alexander_polynomial(const SeifertMatrix& s, Normalization n = Normalization::raw);

/// Throws NormalizationError when no such unit multiple exists.
LaurentPolynomial conway_normalize(const LaurentPolynomial& p);

struct KnotModulePresentation {
  LaurentMatrix presentation;  // tA + (-1)^q A^T
  std::vector<RatLaurent> divisors;
  bool torsion = true;  // det of the presentation is a nonzero polynomial
};

KnotModulePresentation knot_module(const SeifertMatrix& s);

/// (t - 1) acts invertibly on the presented module: |det(A + (-1)^q A^T)| = 1.
bool is_type_K(const SeifertMatrix& s);

struct QuasiUnipotence {
  bool holds = false;
  RatLaurent characteristic_polynomial;
  std::vector<long> cyclotomic_orders;  // with multiplicity, when holds
};

QuasiUnipotence quasi_unipotence(const RatMatrix& h);

/// Every eigenvalue of h is a root of unity.
bool is_quasi_unipotent(const RatMatrix& h);

}  // namespace knotforms
