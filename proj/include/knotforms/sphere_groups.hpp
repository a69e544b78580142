#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotforms/arith.hpp"
#include "knotforms/seifert.hpp"

namespace knotforms {

struct GroupVerdict {
  enum class Kind { trivial, cyclic, z2, unknown };
  Kind kind = Kind::trivial;
  Integer order = 1;  // group order when known
  std::string description;
};

/// "trivial", "Z/28", "Z/2" or "unknown".
std::string to_string(const GroupVerdict& g);

/// Order of the image of J in dimension 4k-1: den(B_k / 4k). Requires k >= 1.
Integer im_j_order(int k);

/// |bP^{4k}| = 2^{2k-2} (2^{2k-1} - 1) num(4 B_k / k). Requires k >= 2.
Integer bp4k_order(int k);

/// Dimensions 4k+2 where bP^{4k+2} is not Z/2, each with its source.
struct ExceptionalDimension {
  int dimension;
  GroupVerdict::Kind kind;  // trivial or unknown
  std::string provenance;
};

/// State of knowledge as of the classical theory: trivial in 2, 6, 14, 30,
/// 62; open in 126.
const std::vector<ExceptionalDimension>& classical_exceptions();
/// Same list with the 2024 resolution of dimension 126 applied.
const std::vector<ExceptionalDimension>& current_exceptions();

GroupVerdict bp4k2_group(int k, const std::vector<ExceptionalDimension>& table = classical_exceptions());

/// Group of homotopy n-spheres that embed in codimension two.
GroupVerdict embeddable_spheres_group(int n, const std::vector<ExceptionalDimension>& table = classical_exceptions());

/// Which homotopy sphere bounds the Seifert hypersurface.
struct BpClass {
  int q = 0;
  int sphere_dimension = 0;  // 2q - 1
  GroupVerdict group;
  /// q = 2 has no bP^4 formula; the class is read in bP^8 instead.
  bool stabilized = false;
  std::optional<int> signature;        // q even
  std::optional<Integer> class_value;  // signed sigma/8 (q even) or KARL (q odd)
  std::optional<Integer> residue;      // class modulo the group order
  bool exotic = false;
  std::string verdict;
  std::optional<std::string> caution;
};

/// Requires a unimodular Seifert matrix with q >= 1.
BpClass bp_class(const SeifertMatrix& s, const std::vector<ExceptionalDimension>& table = classical_exceptions());

}  // namespace knotforms
