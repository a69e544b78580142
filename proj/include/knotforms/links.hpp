#pragma once

#include <string>
#include <vector>

#include "knotforms/seifert.hpp"

namespace knotforms {

/// Attaching data of the handle decomposition read off a Seifert matrix.
struct HandlePresentation {
  enum class FramingDomain { integers, mod2, none };

  int q = 1;
  std::size_t rank = 0;
  /// L(K_i, K_j) off the diagonal; the diagonal is left 0.
  IntMatrix linking;
  FramingDomain framing_domain = FramingDomain::none;
  /// Q_j, empty when the framing group vanishes.
  std::vector<Integer> framings;
};

std::string to_string(HandlePresentation::FramingDomain d);

/// Linking numbers (-1)^q (a_ij + (-1)^q a_ji) for i < j. Framings: 2 a_jj
/// for q even, a_jj mod 2 for odd q outside {1, 3, 7}, none for q in {1, 3, 7}.
HandlePresentation handle_data(const SeifertMatrix& s);

/// Linking matrix of an r-component link of m-spheres: zero diagonal and
/// M^T = (-1)^{m+1} M.
class LinkingMatrix {
 public:
  const IntMatrix& matrix() const { return m_; }
  int dimension() const { return dim_; }
  int symmetry() const { return dim_ % 2 == 1 ? 1 : -1; }

 private:
  friend LinkingMatrix validate_linking_matrix(IntMatrix m, int dimension);
  IntMatrix m_;
  int dim_ = 1;
};

class InvalidLinkingMatrixError : public Error {
 public:
  using Error::Error;
};

/// Throws InvalidLinkingMatrixError naming the first offending entry.
LinkingMatrix validate_linking_matrix(IntMatrix m, int dimension);

struct IsotopyVerdict {
  enum class Kind { isotopic, not_isotopic, necessary_condition_holds, necessary_condition_fails };
  Kind kind;
  std::string reason;
};

std::string to_string(IsotopyVerdict::Kind k);

/// For m >= 2 equal matrices is exactly isotopy (labels and orientations
/// fixed). For m = 1 only the necessary condition is reported.
IsotopyVerdict links_isotopic(const LinkingMatrix& a, const LinkingMatrix& b);

}  // namespace knotforms
