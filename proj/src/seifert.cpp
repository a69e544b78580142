#include "knotforms/seifert.hpp"

#include "knotforms/factor.hpp"

namespace knotforms {

SeifertMatrix::SeifertMatrix(IntMatrix a, int q) : a_(std::move(a)), q_(q) {
  if (!a_.is_square()) throw DomainError("Seifert matrix must be square");
  if (q_ < 0) throw DomainError("Seifert matrix: q must be nonnegative");
}

namespace {

IntMatrix symmetrized(const SeifertMatrix& s) {
  const IntMatrix& a = s.matrix();
  return s.epsilon() == 1 ? a + a.transpose() : a - a.transpose();
}

}  // namespace

IntMatrix intersection_form(const SeifertMatrix& s) {
  IntMatrix m = symmetrized(s);
  return s.epsilon() == 1 ? m : -m;
}

bool is_unimodular(const SeifertMatrix& s) {
  Integer d = det(intersection_form(s));
  return d == 1 || d == -1;
}

bool is_fibered_form(const SeifertMatrix& s) {
  Integer d = det(s.matrix());
  return d == 1 || d == -1;
}

RatMatrix monodromy(const SeifertMatrix& s) {
  RatMatrix a = to_rational(s.matrix());
  RatMatrix inv;
  try {
    inv = inverse(a.transpose());
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("monodromy undefined: Seifert matrix is singular, so the link is not fibered");
  }
  RatMatrix h = inv * a;
  return s.q() % 2 == 1 ? h : -h;
}

LaurentPolynomial conway_normalize(const LaurentPolynomial& p) {
  if (p.is_zero()) throw NormalizationError("cannot normalize the zero Alexander polynomial");
  Integer at_one = p.evaluate(Integer(1));
  if (at_one != 1 && at_one != -1)
    throw NormalizationError("Delta(1) = " + to_string(at_one) + " is not +-1; the boundary is not a homotopy sphere");
  if (p.span() % 2 != 0) throw NormalizationError("Alexander polynomial has odd degree span; no symmetric representative");
  LaurentPolynomial c = p.shifted(-(p.min_exponent() + p.max_exponent()) / 2);
  if (at_one == -1) c = -c;
  if (c.reciprocal() != c) throw NormalizationError("Alexander polynomial is not symmetric up to a unit");
  return c;
}

LaurentPolynomial alexander_polynomial(const SeifertMatrix& s, Normalization n) {
  const IntMatrix& a = s.matrix();
  IntMatrix b = s.epsilon() == 1 ? a.transpose() : IntMatrix(-a.transpose());
  LaurentPolynomial raw = pencil_det(a, b);
  return n == Normalization::raw ? raw : conway_normalize(raw);
}

KnotModulePresentation knot_module(const SeifertMatrix& s) {
  const IntMatrix& a = s.matrix();
  IntMatrix b = s.epsilon() == 1 ? a.transpose() : IntMatrix(-a.transpose());
  KnotModulePresentation out;
  out.presentation = pencil(a, b);
  out.divisors = elementary_divisors_Qt(out.presentation);
  for (const auto& d : out.divisors)
    if (d.is_zero()) out.torsion = false;
  return out;
}

bool is_type_K(const SeifertMatrix& s) {
  Integer d = det(symmetrized(s));
  return d == 1 || d == -1;
}

QuasiUnipotence quasi_unipotence(const RatMatrix& h) {
  if (!h.is_square()) throw DomainError("quasi_unipotence: non-square matrix");
  QuasiUnipotence out;
  out.characteristic_polynomial = characteristic_polynomial(h);
  // Roots of unity are algebraic integers, so a monic characteristic
  // polynomial with a fractional coefficient already fails.
  for (const auto& [e, c] : out.characteristic_polynomial.terms())
    if (!is_integral(c)) return out;
  // Eigenvalue 0; split_cyclotomic works up to powers of t and would miss it.
  if (out.characteristic_polynomial.coeff(0) == 0) return out;
  CyclotomicSplit split = split_cyclotomic(to_integer(out.characteristic_polynomial));
  out.holds = split.complete;
  if (out.holds) out.cyclotomic_orders = std::move(split.orders);
  return out;
}

bool is_quasi_unipotent(const RatMatrix& h) { return quasi_unipotence(h).holds; }

}  // namespace knotforms
