#include "knotforms/brieskorn.hpp"

#include "knotforms/quadratic.hpp"

namespace knotforms {

BrieskornGerm::BrieskornGerm(std::vector<int> exponents) : a_(std::move(exponents)) {
  if (a_.empty()) throw DomainError("Brieskorn germ needs at least one exponent");
  for (int a : a_)
    if (a < 2) throw DomainError("Brieskorn exponent " + std::to_string(a) + " is below 2");
}

Integer BrieskornGerm::milnor_number() const {
  Integer mu = 1;
  for (int a : a_) mu *= a - 1;
  return mu;
}

std::string to_string(const BrieskornGerm& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.exponents().size(); ++i) s += (i ? "," : "") + std::to_string(g.exponents()[i]);
  return s + ")";
}

IntMatrix pham_matrix(int a) {
  if (a < 2) throw DomainError("pham_matrix: exponent must be >= 2");
  const std::size_t n = static_cast<std::size_t>(a - 1);
  IntMatrix p = IntMatrix::identity(n);
  for (std::size_t i = 1; i < n; ++i) p(i, i - 1) = -1;
  return p;
}

IntMatrix sakamoto(const IntMatrix& af, const IntMatrix& ag, int n, int m) {
  IntMatrix k = kronecker(af, ag);
  return ((n + 1) * (m + 1)) % 2 == 0 ? k : IntMatrix(-k);
}

SeifertMatrix brieskorn_seifert(const BrieskornGerm& g) {
  const auto& a = g.exponents();
  IntMatrix acc = pham_matrix(a.front());
  for (std::size_t i = 1; i < a.size(); ++i) acc = sakamoto(acc, pham_matrix(a[i]), static_cast<int>(i) - 1, 0);
  return SeifertMatrix(std::move(acc), g.q());
}

GermReport germ_report(const BrieskornGerm& g) {
  GermReport r(g, brieskorn_seifert(g));
  const SeifertMatrix& s = r.seifert;
  r.fibered = is_fibered_form(s);
  if (r.fibered) {
    r.monodromy = monodromy(s);
    r.quasi_unipotence = quasi_unipotence(r.monodromy);
    if (!r.quasi_unipotence.holds) r.anomalies.push_back("monodromy is not quasi-unipotent");
  } else {
    r.anomalies.push_back("Seifert matrix is not unimodular, so the link is not fibered");
  }
  r.intersection_form = intersection_form(s);
  r.intersection_det = det(r.intersection_form);
  r.unimodular = r.intersection_det == 1 || r.intersection_det == -1;
  r.alexander_raw = alexander_polynomial(s, Normalization::raw);
  if (!r.unimodular) {
    r.anomalies.push_back("intersection form has determinant " + to_string(r.intersection_det) +
                          "; the link is not a homotopy sphere");
  } else {
    r.alexander_conway = conway_normalize(r.alexander_raw);
  }
  if (s.q() % 2 == 0) {
    r.signature = signature(r.intersection_form);
  } else if (r.unimodular) {
    r.karl = karl(s);
  }
  if (r.unimodular && s.q() >= 1) r.bp = bp_class(s);
  return r;
}

}  // namespace knotforms
