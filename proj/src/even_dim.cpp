#include "knotforms/even_dim.hpp"

#include "knotforms/polymatrix.hpp"

namespace knotforms {

namespace {

void check_shape(const TorsionPresentation& p) {
  const std::size_t n = p.alpha();
  if (p.a.rows() != n || p.a.cols() != n || p.b.rows() != n || p.b.cols() != n)
    throw DomainError("torsion presentation: A and B must be " + std::to_string(n) + "x" + std::to_string(n));
  for (const auto& d : p.orders)
    if (d < 0) throw DomainError("torsion presentation: orders must be nonnegative");
}

// [m; diag(orders)] restricted to the given indices.
IntMatrix stacked(const IntMatrix& m, const std::vector<Integer>& orders, const std::vector<std::size_t>& idx) {
  const std::size_t k = idx.size();
  IntMatrix s(2 * k, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) s(r, c) = m(idx[r], idx[c]);
    s(k + r, r) = orders[idx[r]];
  }
  return s;
}

bool all_ones(const std::vector<Integer>& snf) {
  for (const auto& d : snf)
    if (d != 1) return false;
  return true;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

Rational mod_one(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - fl;
}

PresentationValidation validate_presentation(const TorsionPresentation& p) {
  check_shape(p);
  PresentationValidation v;
  const std::size_t n = p.alpha();
  const int sign = p.q % 2 == 0 ? -1 : 1;  // (-1)^{q+1}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (p.orders[i] == 0 && p.orders[j] == 0) continue;
      Integer value = p.orders[i] * p.a(i, j) + sign * p.orders[j] * p.b(j, i);
      if (value != 0) {
        v.relation_holds = false;
        v.violations.push_back({i, j, value});
      }
    }

  const auto idx = all_indices(n);
  for (const auto& d : smith_normal_form(stacked(p.a - p.b, p.orders, idx)))
    if (d != 1) v.cokernel_at_one.push_back(d);
  v.type_k = v.cokernel_at_one.empty();

  std::vector<std::size_t> torsion;
  for (std::size_t i = 0; i < n; ++i)
    if (p.orders[i] != 0) torsion.push_back(i);
  v.minimal = all_ones(smith_normal_form(stacked(p.a, p.orders, torsion)));
  return v;
}

SymmetryCheck torsion_symmetry_check(const RatMatrix& ta_plus, const RatMatrix& ta_minus, int q,
                                     const std::optional<RatMatrix>& ti) {
  const std::size_t n = ta_plus.rows();
  if (!ta_plus.is_square() || ta_minus.rows() != n || ta_minus.cols() != n)
    throw DomainError("torsion_symmetry_check: matrices must be square of equal size");
  if (ti && (ti->rows() != n || ti->cols() != n)) throw DomainError("torsion_symmetry_check: TI has the wrong size");
  const int e = q % 2 == 0 ? 1 : -1;  // (-1)^q
  SymmetryCheck c;
  c.transpose_relation = true;
  c.derived_intersection = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (mod_one(ta_plus(i, j) - e * ta_minus(j, i)) != 0) c.transpose_relation = false;
      c.derived_intersection(i, j) = mod_one(-(ta_plus(i, j) - e * ta_plus(j, i)));
    }
  c.derived_symmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (mod_one(c.derived_intersection(j, i) + e * c.derived_intersection(i, j)) != 0) c.derived_symmetric = false;
  if (ti) {
    bool match = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (mod_one((*ti)(i, j) - c.derived_intersection(i, j)) != 0) match = false;
    c.matches_given_intersection = match;
  }
  return c;
}

ModuleStructure presented_module_structure(const TorsionPresentation& p) {
  PresentationValidation v = validate_presentation(p);
  if (!v.valid()) throw DomainError("presented_module_structure: presentation is not valid");
  if (!v.minimal)
    throw DomainError("presented_module_structure: A does not act invertibly on the torsion group; "
                      "only presentations from minimal Seifert hypersurfaces are supported");
  ModuleStructure s;
  for (std::size_t i = 0; i < p.alpha(); ++i) (p.orders[i] != 0 ? s.torsion_indices : s.free_indices).push_back(i);

  const auto& ti = s.torsion_indices;
  const std::size_t k = ti.size();
  IntMatrix diag(k, k);
  for (std::size_t r = 0; r < k; ++r) diag(r, r) = p.orders[ti[r]];
  for (const auto& d : smith_normal_form(diag)) {
    s.torsion_cardinality *= d;
    if (d != 1) s.torsion_invariants.push_back(d);
  }

  // Since [A; D] has Smith form [I; 0], rows of right * left_top solve
  // y A + w D = e_j; their first k entries give A^{-1} on the group.
  IntMatrix a_t(k, k), b_t(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      a_t(r, c) = p.a(ti[r], ti[c]);
      b_t(r, c) = p.b(ti[r], ti[c]);
    }
  SmithDecomposition sd = smith_decomposition(stacked(p.a, p.orders, ti));
  IntMatrix left_top(k, 2 * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < 2 * k; ++c) left_top(r, c) = sd.left(r, c);
  IntMatrix solve = sd.right * left_top;
  IntMatrix inv_a(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) inv_a(r, c) = solve(r, c);
  s.t_action = inv_a * b_t;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) s.t_action(r, c) = mod_floor(s.t_action(r, c), p.orders[ti[c]]);

  const auto& fi = s.free_indices;
  LaurentMatrix pres(fi.size(), fi.size());
  for (std::size_t r = 0; r < fi.size(); ++r)
    for (std::size_t c = 0; c < fi.size(); ++c) {
      LaurentPolynomial e = LaurentPolynomial::monomial(p.a(fi[r], fi[c]), 1);
      e.add_term(0, Integer(-p.b(fi[r], fi[c])));
      pres(r, c) = std::move(e);
    }
  s.free_divisors = elementary_divisors_Qt(pres);
  return s;
}

}  // namespace knotforms
