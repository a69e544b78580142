#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotforms/seifert.hpp"
#include "knotforms/sphere_groups.hpp"

namespace knotforms {

/// z_0^{a_0} + ... + z_q^{a_q} with every a_i >= 2.
class BrieskornGerm {
 public:
  explicit BrieskornGerm(std::vector<int> exponents);

  const std::vector<int>& exponents() const { return a_; }
  int variables() const { return static_cast<int>(a_.size()); }
  /// Middle dimension of the Milnor fibre; the link has dimension 2q - 1.
  int q() const { return variables() - 1; }
  /// prod (a_i - 1)
  Integer milnor_number() const;

 private:
  std::vector<int> a_;
};

std::string to_string(const BrieskornGerm& g);

/// Seifert matrix of z^a: 1 on the diagonal, -1 just below it.
IntMatrix pham_matrix(int a);

/// Seifert matrix of f(x) + g(y) from those of f (n+1 variables) and g
/// (m+1 variables): (-1)^{(n+1)(m+1)} Af (x) Ag.
IntMatrix sakamoto(const IntMatrix& af, const IntMatrix& ag, int n, int m);

/// Left fold of sakamoto over the one-variable Pham matrices.
SeifertMatrix brieskorn_seifert(const BrieskornGerm& g);

struct GermReport {
  GermReport(BrieskornGerm g, SeifertMatrix s) : germ(std::move(g)), seifert(std::move(s)) {}

  BrieskornGerm germ;
  SeifertMatrix seifert;
  bool fibered = false;
  RatMatrix monodromy;
  QuasiUnipotence quasi_unipotence;
  IntMatrix intersection_form;
  Integer intersection_det;
  bool unimodular = false;
  LaurentPolynomial alexander_raw;
  std::optional<LaurentPolynomial> alexander_conway;
  std::optional<int> signature;  // q even
  std::optional<int> karl;       // q odd and unimodular
  std::optional<BpClass> bp;     // unimodular, q >= 1
  std::vector<std::string> anomalies;
};

GermReport germ_report(const BrieskornGerm& g);

}  // namespace knotforms
