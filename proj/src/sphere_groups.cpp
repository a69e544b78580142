#include "knotforms/sphere_groups.hpp"

#include "knotforms/quadratic.hpp"

namespace knotforms {

std::string to_string(const GroupVerdict& g) {
  switch (g.kind) {
    case GroupVerdict::Kind::trivial:
      return "trivial";
    case GroupVerdict::Kind::cyclic:
      return "Z/" + to_string(g.order);
    case GroupVerdict::Kind::z2:
      return "Z/2";
    case GroupVerdict::Kind::unknown:
      return "unknown";
  }
  return "";
}

Integer im_j_order(int k) {
  if (k < 1) throw DomainError("im_j_order: k must be >= 1");
  Rational r = bernoulli(k) / (4 * k);
  return r.get_den();
}

Integer bp4k_order(int k) {
  if (k < 2) throw DomainError("bp4k_order: the formula needs k >= 2; bP^4 is trivial and not covered by it");
  Integer two_a, two_b;
  mpz_ui_pow_ui(two_a.get_mpz_t(), 2, static_cast<unsigned long>(2 * k - 2));
  mpz_ui_pow_ui(two_b.get_mpz_t(), 2, static_cast<unsigned long>(2 * k - 1));
  Rational r = 4 * bernoulli(k) / k;
  return two_a * (two_b - 1) * r.get_num();
}

const std::vector<ExceptionalDimension>& classical_exceptions() {
  static const std::vector<ExceptionalDimension> table = {
      {2, GroupVerdict::Kind::trivial, "Kervaire invariant one element (classical)"},
      {6, GroupVerdict::Kind::trivial, "Kervaire invariant one element (classical)"},
      {14, GroupVerdict::Kind::trivial, "Kervaire invariant one element (classical)"},
      {30, GroupVerdict::Kind::trivial, "Kervaire invariant one element (Barratt-Jones-Mahowald)"},
      {62, GroupVerdict::Kind::trivial, "Kervaire invariant one element (Barratt-Jones-Mahowald)"},
      {126, GroupVerdict::Kind::unknown, "open after Hill-Hopkins-Ravenel"},
  };
  return table;
}

const std::vector<ExceptionalDimension>& current_exceptions() {
  static const std::vector<ExceptionalDimension> table = [] {
    auto t = classical_exceptions();
    t.back() = {126, GroupVerdict::Kind::trivial, "Kervaire invariant one element (Lin-Wang-Xu, 2024)"};
    return t;
  }();
  return table;
}

GroupVerdict bp4k2_group(int k, const std::vector<ExceptionalDimension>& table) {
  if (k < 0) throw DomainError("bp4k2_group: k must be >= 0");
  const int dim = 4 * k + 2;
  for (const auto& e : table)
    if (e.dimension == dim) {
      GroupVerdict g;
      g.kind = e.kind;
      g.description = e.provenance;
      return g;
    }
  return {GroupVerdict::Kind::z2, 2, "detected by the Kervaire-Arf invariant"};
}

GroupVerdict embeddable_spheres_group(int n, const std::vector<ExceptionalDimension>& table) {
  if (n < 1) throw DomainError("embeddable_spheres_group: n must be >= 1");
  if (n % 2 == 0) return {GroupVerdict::Kind::trivial, 1, "even n"};
  if (n <= 4) return {GroupVerdict::Kind::trivial, 1, "low dimension"};
  if (n % 4 == 3) {
    const int k = (n + 1) / 4;
    return {GroupVerdict::Kind::cyclic, bp4k_order(k), "generated by the boundary of the E8 plumbing"};
  }
  GroupVerdict g = bp4k2_group((n - 1) / 4, table);
  if (g.kind == GroupVerdict::Kind::trivial) g.description = "exceptional: " + g.description;
  return g;
}

BpClass bp_class(const SeifertMatrix& s, const std::vector<ExceptionalDimension>& table) {
  if (s.q() < 1) throw DomainError("bp_class: needs q >= 1");
  if (!is_unimodular(s)) throw DomainError("bp_class: intersection form is not unimodular, boundary is not a homotopy sphere");
  BpClass out;
  out.q = s.q();
  out.sphere_dimension = 2 * s.q() - 1;
  const std::string sphere = "S^" + std::to_string(out.sphere_dimension);
  const std::string homotopy_sphere = "Sigma^" + std::to_string(out.sphere_dimension);

  if (s.q() % 2 == 0) {
    int k = s.q() / 2;
    if (k < 2) {
      k = 2;
      out.stabilized = true;
    }
    out.group = embeddable_spheres_group(4 * k - 1, table);
    IntMatrix form = intersection_form(s);
    int sig = signature(form);
    out.signature = sig;
    if (sig % 8 != 0)
      throw Error("bp_class: signature " + std::to_string(sig) +
                  " of a unimodular even form is not divisible by 8; sign conventions are inconsistent");
    out.class_value = Integer(sig / 8);
    out.residue = mod_floor(*out.class_value, out.group.order);
    const std::string cls = to_string(*out.class_value) + " (" + to_string(*out.residue) + " mod " +
                            to_string(out.group.order) + ")";
    if (out.stabilized) {
      // The 3-dimensional link is only a homology sphere; the class is the
      // signature count read in the first group the formula covers.
      out.verdict = "signed class " + cls + " in " + to_string(out.group) +
                    " (no formula for bP^4; read in dimension 7, link is a homology 3-sphere)";
    } else {
      out.exotic = *out.residue != 0;
      out.verdict = (out.exotic ? "exotic " + homotopy_sphere : "standard " + sphere) + ", class " + cls + " in " +
                    to_string(out.group);
    }
    return out;
  }

  out.group = embeddable_spheres_group(out.sphere_dimension, table);
  int k = karl(s);
  out.class_value = Integer(k);
  switch (out.group.kind) {
    case GroupVerdict::Kind::z2:
      out.residue = Integer(k);
      out.exotic = k == 1;
      out.verdict = out.exotic ? "exotic " + homotopy_sphere + " (Kervaire sphere)" : "standard " + sphere;
      break;
    case GroupVerdict::Kind::trivial:
      out.residue = Integer(0);
      out.verdict = "standard " + sphere;
      out.caution = "the group is trivial, so KARL = " + std::to_string(k) + " detects only the Arf invariant of the handlebody";
      break;
    default:
      out.verdict = "unknown: the group in dimension " + std::to_string(out.sphere_dimension) + " is undetermined";
      break;
  }
  return out;
}

}  // namespace knotforms
