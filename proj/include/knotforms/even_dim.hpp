#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotforms/laurent.hpp"
#include "knotforms/matrix.hpp"

namespace knotforms {

/// Module with generators x_1..x_alpha and relations
/// sum_j (t a_ij - b_ij) x_j and d_j x_j. An order d_j = 0 marks a free
/// generator.
struct TorsionPresentation {
  std::vector<Integer> orders;
  IntMatrix a;
  IntMatrix b;
  int q = 1;

  std::size_t alpha() const { return orders.size(); }
};

struct RelationViolation {
  std::size_t i;
  std::size_t j;
  Integer value;  // d_i a_ij + (-1)^{q+1} d_j b_ji
};

struct PresentationValidation {
  /// d_i a_ij + (-1)^{q+1} d_j b_ji = 0 wherever d_i or d_j is nonzero.
  bool relation_holds = true;
  std::vector<RelationViolation> violations;
  /// (1 - t) is invertible: the presentation at t = 1 has trivial cokernel.
  bool type_k = false;
  std::vector<Integer> cokernel_at_one;  // nontrivial Smith invariants
  /// A induces an automorphism of the torsion group sum Z/d_j.
  bool minimal = false;

  bool valid() const { return relation_holds && type_k; }
};

/// Throws DomainError when the shapes disagree or an order is negative.
PresentationValidation validate_presentation(const TorsionPresentation& p);

struct SymmetryCheck {
  /// TA+ = (-1)^q TA-^T in Q/Z.
  bool transpose_relation = false;
  /// -(TA+ + (-1)^{q+1} TA+^T), reduced into [0, 1).
  RatMatrix derived_intersection;
  /// The derived form is (-1)^{q+1}-symmetric.
  bool derived_symmetric = false;
  /// Agreement with a supplied TI, when one was given.
  std::optional<bool> matches_given_intersection;

  bool holds() const { return transpose_relation && derived_symmetric && matches_given_intersection.value_or(true); }
};

/// Entries are read in Q/Z; any rational representative is accepted.
SymmetryCheck torsion_symmetry_check(const RatMatrix& ta_plus, const RatMatrix& ta_minus, int q,
                                     const std::optional<RatMatrix>& ti = std::nullopt);

/// Fractional part in [0, 1).
Rational mod_one(const Rational& x);

struct ModuleStructure {
  /// Torsion generators (d_k != 0): the group is sum Z/d_k.
  std::vector<std::size_t> torsion_indices;
  std::vector<Integer> torsion_invariants;  // Smith invariants of the group, units dropped
  Integer torsion_cardinality = 1;
  /// Action of t on the torsion group: x -> x * t_action (row vectors),
  /// column j read modulo d_j.
  IntMatrix t_action;
  /// Free generators (d_k = 0) and the Q[t, t^-1] divisors of their block.
  std::vector<std::size_t> free_indices;
  std::vector<RatLaurent> free_divisors;
};

/// Requires a valid, minimal presentation; throws DomainError otherwise.
ModuleStructure presented_module_structure(const TorsionPresentation& p);

}  // namespace knotforms
