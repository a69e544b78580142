#include "knotforms/links.hpp"

namespace knotforms {

std::string to_string(HandlePresentation::FramingDomain d) {
  switch (d) {
    case HandlePresentation::FramingDomain::integers:
      return "Z";
    case HandlePresentation::FramingDomain::mod2:
      return "Z/2";
    case HandlePresentation::FramingDomain::none:
      return "none";
  }
  return "";
}

HandlePresentation handle_data(const SeifertMatrix& s) {
  HandlePresentation h;
  h.q = s.q();
  h.rank = s.rank();
  const IntMatrix& a = s.matrix();
  const int e = s.epsilon();
  h.linking = IntMatrix(h.rank, h.rank);
  for (std::size_t i = 0; i < h.rank; ++i)
    for (std::size_t j = 0; j < h.rank; ++j)
      if (i != j) h.linking(i, j) = e * (a(i, j) + e * a(j, i));

  if (s.q() % 2 == 0) {
    h.framing_domain = HandlePresentation::FramingDomain::integers;
    for (std::size_t j = 0; j < h.rank; ++j) h.framings.push_back(2 * a(j, j));
  } else if (s.q() != 1 && s.q() != 3 && s.q() != 7) {
    h.framing_domain = HandlePresentation::FramingDomain::mod2;
    for (std::size_t j = 0; j < h.rank; ++j) h.framings.push_back(mod_floor(a(j, j), Integer(2)));
  }
  return h;
}

LinkingMatrix validate_linking_matrix(IntMatrix m, int dimension) {
  if (!m.is_square()) throw DomainError("linking matrix must be square");
  if (dimension < 1) throw DomainError("link dimension must be >= 1");
  const int sign = dimension % 2 == 1 ? 1 : -1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0)
      throw InvalidLinkingMatrixError("nonzero diagonal entry at (" + std::to_string(i + 1) + "," +
                                      std::to_string(i + 1) + ")");
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(j, i) != sign * m(i, j))
        throw InvalidLinkingMatrixError("entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and (" +
                                        std::to_string(j + 1) + "," + std::to_string(i + 1) + ") violate " +
                                        (sign == 1 ? "symmetry" : "antisymmetry"));
  }
  LinkingMatrix l;
  l.m_ = std::move(m);
  l.dim_ = dimension;
  return l;
}

std::string to_string(IsotopyVerdict::Kind k) {
  switch (k) {
    case IsotopyVerdict::Kind::isotopic:
      return "isotopic";
    case IsotopyVerdict::Kind::not_isotopic:
      return "not isotopic";
    case IsotopyVerdict::Kind::necessary_condition_holds:
      return "necessary condition holds";
    case IsotopyVerdict::Kind::necessary_condition_fails:
      return "necessary condition fails";
  }
  return "";
}

IsotopyVerdict links_isotopic(const LinkingMatrix& a, const LinkingMatrix& b) {
  if (a.matrix().rows() != b.matrix().rows()) throw DomainError("links_isotopic: component counts differ");
  if (a.dimension() != b.dimension()) throw DomainError("links_isotopic: link dimensions differ");
  const bool equal = a.matrix() == b.matrix();
  if (a.dimension() >= 2) {
    if (equal) return {IsotopyVerdict::Kind::isotopic, "linking matrices agree"};
    return {IsotopyVerdict::Kind::not_isotopic, "linking matrices differ"};
  }
  if (equal)
    return {IsotopyVerdict::Kind::necessary_condition_holds,
            "linking numbers agree; for classical links this does not decide isotopy"};
  return {IsotopyVerdict::Kind::necessary_condition_fails, "linking numbers differ"};
}

}  // namespace knotforms
